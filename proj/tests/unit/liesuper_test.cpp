#include <gtest/gtest.h>

#include "spva/bracket.hpp"
#include "spva/builtin.hpp"
#include "spva/errors.hpp"
#include "spva/io.hpp"
#include "spva/text.hpp"

using namespace spva;

namespace {

std::size_t idx(const LieSuperAlgebra& g, const char* n) { return g.index(n); }

}  // namespace

TEST(LieSuper, Osp22Validates) {
  auto b = builtin("osp(2|2)");
  EXPECT_EQ(b.algebra.dim(), 8u);
  EXPECT_TRUE(validate(b.algebra).ok());
}

TEST(LieSuper, Osp22Grading) {
  const auto g = builtin("osp22").algebra;
  for (auto n : {"e2", "e3"}) EXPECT_EQ(g.degree(idx(g, n)), 1) << n;
  for (auto n : {"f1", "h1", "h2", "e1"}) EXPECT_EQ(g.degree(idx(g, n)), 0) << n;
  for (auto n : {"f2", "f3"}) EXPECT_EQ(g.degree(idx(g, n)), -1) << n;
}

TEST(LieSuper, Osp22Relations) {
  const auto g = builtin("osp22").algebra;
  auto br = [&](const char* a, const char* b) { return g.bracket(g.unit(idx(g, a)), g.unit(idx(g, b))); };
  EXPECT_EQ(br("e1", "f1"), g.unit(idx(g, "h1")));
  EXPECT_EQ(br("e2", "f2"), g.unit(idx(g, "h2")));
  EXPECT_EQ(br("h2", "e1"), Rational(2) * g.unit(idx(g, "e1")));
  EXPECT_EQ(g.form(idx(g, "e1"), idx(g, "f1")), -2);
  EXPECT_EQ(g.form(idx(g, "e3"), idx(g, "f3")), 4);
}

TEST(LieSuper, BrokenFormIsNotInvariant) {
  auto g = builtin("osp22").algebra;
  const auto e1 = idx(g, "e1"), e2 = idx(g, "e2"), f3 = idx(g, "f3"), e3 = idx(g, "e3");
  g.set_form(e3, f3, 1);
  auto r = validate(g);
  ASSERT_NE(r.find("form invariant"), nullptr);
  EXPECT_FALSE(r.find("form invariant")->passed);
  Rational lhs = g.form(g.bracket(g.unit(e1), g.unit(e2)), g.unit(f3));
  Rational rhs = g.form(g.unit(e1), g.bracket(g.unit(e2), g.unit(f3)));
  EXPECT_NE(lhs, rhs);
}

TEST(LieSuper, AbelianWithIdentityForm) {
  LieSuperAlgebra g("abelian", {{"x", Parity::Even, 0}, {"y", Parity::Even, 0}});
  g.set_form(0, 0, 1);
  g.set_form(1, 1, 1);
  EXPECT_TRUE(validate(g).ok());
}

TEST(LieSuper, BrokenJacobiIsReported) {
  auto g = builtin("osp22").algebra;
  Vec v = g.dense(g.bracket(idx(g, "e1"), idx(g, "f1")));
  v[idx(g, "h1")] += 1;
  g.set_bracket(idx(g, "e1"), idx(g, "f1"), v);
  auto r = validate(g);
  EXPECT_FALSE(r.ok());
}

TEST(LieSuper, SlFamiliesValidate) {
  for (const char* name : {"sl(2|1)", "sl(3|1)", "osp(4|4)"}) {
    auto b = builtin(name);
    EXPECT_TRUE(validate(b.algebra).ok()) << name;
    auto g = std::make_shared<const LieSuperAlgebra>(b.algebra);
    EXPECT_TRUE(validate_reduction(make_reduction(g, b.reduction)).ok()) << name;
  }
}

TEST(LieSuper, UnknownBuiltinRejected) { EXPECT_THROW(builtin("so(3)"), InvalidData); }

TEST(Reduction, Osp22DataPasses) {
  auto b = builtin("osp22");
  auto g = std::make_shared<const LieSuperAlgebra>(b.algebra);
  auto rd = make_reduction(g, b.reduction);
  EXPECT_TRUE(validate_reduction(rd).ok());
  EXPECT_EQ(rd.fn.size(), 2u);
  EXPECT_EQ(rd.V.size(), 4u);
  EXPECT_EQ(rd.i, 1);
  EXPECT_EQ(rd.j, 1);
  // dual bases
  for (std::size_t t = 0; t < rd.bminus.size(); ++t)
    for (std::size_t u = 0; u < rd.bminus.size(); ++u)
      EXPECT_EQ(g->form(rd.bdual[t], g->unit(rd.bminus[u])), t == u ? 1 : 0);
}

TEST(Reduction, EvenFIsRejected) {
  auto b = builtin("osp22");
  auto g = std::make_shared<const LieSuperAlgebra>(b.algebra);
  b.reduction.f = g->unit(g->index("f3"));
  auto r = validate_reduction(make_reduction(g, b.reduction));
  EXPECT_FALSE(r.find("f odd and homogeneous of negative degree")->passed);
}

TEST(Reduction, SlnnModIdentityFailsInjectivity) {
  auto b = builtin("sl(n|n)/I");
  auto g = std::make_shared<const LieSuperAlgebra>(b.algebra);
  EXPECT_TRUE(validate(*g).ok());
  auto r = validate_reduction(make_reduction(g, b.reduction));
  EXPECT_FALSE(r.find("A-3 ad f injective on n")->passed);
}

TEST(Affine, FirstBracketOfE1F1) {
  auto b = builtin("osp22");
  auto vars = affine_variables(b.algebra);
  auto spec = affine_spec(b.algebra, 1, vars);
  ChiPoly r = master_bracket(spec, parse_spoly("e1bar", *vars), parse_spoly("f1bar", *vars));
  EXPECT_EQ(r, parse_chipoly("-h1bar + 2*X", *vars));
}

TEST(Affine, SecondBracketVanishesForCentralS) {
  LieSuperAlgebra g("abelian", {{"x", Parity::Odd, 1}, {"y", Parity::Odd, -1}});
  g.set_form(0, 1, 1);
  auto vars = affine_variables(g);
  auto spec = affine_spec(g, 2, vars, g.unit(0));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_TRUE(spec.entry(a, c).is_zero());
}

TEST(Io, RoundTrip) {
  auto b = builtin("osp22");
  std::string text = algebra_to_json(b.algebra, b.reduction);
  AlgebraInput in = parse_algebra_json(text);
  ASSERT_EQ(in.algebra.dim(), b.algebra.dim());
  for (std::size_t a = 0; a < 8; ++a) {
    EXPECT_EQ(in.algebra.basis(a).name, b.algebra.basis(a).name);
    for (std::size_t c = 0; c < 8; ++c) {
      EXPECT_EQ(in.algebra.dense(in.algebra.bracket(a, c)), b.algebra.dense(b.algebra.bracket(a, c)));
      EXPECT_EQ(in.algebra.form(a, c), b.algebra.form(a, c));
    }
  }
  EXPECT_EQ(in.reduction.f, b.reduction.f);
  EXPECT_EQ(in.reduction.n, b.reduction.n);
  EXPECT_EQ(algebra_to_json(in.algebra, in.reduction), text);
}

TEST(Io, SyntaxErrorHasPosition) {
  try {
    parse_algebra_json("{\n  \"name\": \"x\",\n  \"basis\": [ }\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Io, SchemaErrorsNameTheEntry) {
  const char* doc = R"({"name": "x", "basis": [{"name": "a", "parity": "odd", "degree": 0}],
    "brackets": [["a", "b", {"a": 1}]], "form": [], "reduction": {"n": [], "m": [], "f": {}, "s": {}}})";
  try {
    parse_algebra_json(doc);
    FAIL() << "no error";
  } catch (const InvalidData& e) {
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_algebra_json(R"({"name": "x", "basis": [{"name": "a", "parity": "odd", "degree": 0}],
    "brackets": [], "form": [["a", "a", "1/0"]]})"),
               InvalidData);
}
