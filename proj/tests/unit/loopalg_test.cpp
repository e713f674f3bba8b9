#include <gtest/gtest.h>
#include <set>

#include "spva/builtin.hpp"
#include "spva/errors.hpp"
#include "spva/loopalg.hpp"

using namespace spva;

namespace {

struct Osp22 {
  std::shared_ptr<const LieSuperAlgebra> g;
  std::shared_ptr<const ReductionData> rd;
  VariableSetPtr vars;
  Osp22(int zmin = -4, int zmax = 4) {
    auto b = builtin("osp22");
    g = std::make_shared<const LieSuperAlgebra>(b.algebra);
    rd = std::make_shared<const ReductionData>(make_reduction(g, b.reduction));
    vars = affine_variables(*g);
    la = std::make_unique<LoopAlgebra>(rd, zmin, zmax);
  }
  std::size_t operator[](const char* n) const { return g->index(n); }
  SPoly var(const char* n) const { return SPoly::var(*vars->find(n)); }
  std::unique_ptr<LoopAlgebra> la;
};

}  // namespace

TEST(LoopAlgebra, LambdaSquared) {
  Osp22 o;
  LoopElem l = o.la->lambda();
  LoopElem half = Rational(1, 2) * o.la->bracket(l, l);
  EXPECT_EQ(half, LoopElem::single(1, o["h2"], SPoly(1)));
  EXPECT_EQ(o.la->lambda_squared(), half);
}

TEST(LoopAlgebra, BracketOfF2WithZE2) {
  Osp22 o;
  LoopElem r = o.la->bracket(LoopElem::single(0, o["f2"], SPoly(1)), LoopElem::single(1, o["e2"], SPoly(1)));
  // both odd: [f2, e2] = [e2, f2] = h2
  EXPECT_EQ(r, LoopElem::single(1, o["h2"], SPoly(1)));
  EXPECT_TRUE(o.la->bracket(r, LoopElem()).is_zero());
}

TEST(LoopAlgebra, KoszulSignOnCoefficients) {
  Osp22 o;
  // [a (x) u, b (x) v] = (-1)^{p(b)p(u)} [a,b] (x) uv with u = h1bar odd, b = f1 odd
  SPoly u = o.var("h1bar"), v = o.var("e1bar");
  LoopElem r = o.la->bracket(LoopElem::single(0, o["e1"], u), LoopElem::single(0, o["f1"], v));
  EXPECT_EQ(r, LoopElem::single(0, o["h1"], -(u * v)));
}

TEST(LoopAlgebra, GradeIsAdditive) {
  Osp22 o;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      LoopElem x = LoopElem::single(1, a, SPoly(1)), y = LoopElem::single(-2, b, SPoly(1));
      LoopElem r = o.la->bracket(x, y);
      if (r.is_zero()) continue;
      auto [lo, hi] = o.la->grade_range(r);
      EXPECT_EQ(lo, hi);
      EXPECT_EQ(lo, o.la->grade({1, a}) + o.la->grade({-2, b}));
    }
}

TEST(LoopAlgebra, Osp22Decomposition) {
  Osp22 o;
  EXPECT_TRUE(o.la->semisimplicity_failures().empty());
  std::set<std::string> ker, im;
  for (int grade = -2; grade <= 2; ++grade) {
    const GradedPiece& p = o.la->piece(grade);
    EXPECT_EQ(p.kernel.size() + p.image.size(), p.basis.size());
    for (const auto& v : p.kernel)
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) ker.insert(o.g->basis(p.basis[k].second).name);
    for (const auto& v : p.image)
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) im.insert(o.g->basis(p.basis[k].second).name);
  }
  EXPECT_EQ(ker, (std::set<std::string>{"f2", "h1", "h2", "e2"}));
  EXPECT_EQ(im, (std::set<std::string>{"f3", "f1", "e1", "e3"}));
  const GradedPiece& p0 = o.la->piece(0);
  ASSERT_EQ(p0.center.size(), 1u);
  LoopElem c;
  for (std::size_t k = 0; k < p0.basis.size(); ++k)
    if (p0.center[0][k] != 0) c.add(p0.basis[k].first, p0.basis[k].second, SPoly(p0.center[0][k]));
  EXPECT_EQ(c, LoopElem::single(0, o["h2"], SPoly(1)));
  EXPECT_TRUE(o.la->piece(1).center.empty());
}

TEST(LoopAlgebra, CenterCommutesWithKernel) {
  Osp22 o;
  for (int grade = -2; grade <= 2; ++grade)
    for (int other = -2; other <= 2; ++other) {
      const GradedPiece& p = o.la->piece(grade);
      const GradedPiece& q = o.la->piece(other);
      for (const auto& z : p.center)
        for (const auto& k : q.kernel) {
          LoopElem x, y;
          for (std::size_t i = 0; i < z.size(); ++i)
            if (z[i] != 0) x.add(p.basis[i].first, p.basis[i].second, SPoly(z[i]));
          for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) y.add(q.basis[i].first, q.basis[i].second, SPoly(k[i]));
          EXPECT_TRUE(o.la->bracket(x, y).is_zero());
        }
    }
}

TEST(LoopAlgebra, SplitRecomposes) {
  Osp22 o;
  SPoly u = o.var("e1bar");
  for (std::size_t a = 0; a < 8; ++a) {
    LoopElem x = LoopElem::single(-1, a, u);
    auto [k, i] = o.la->split(x);
    EXPECT_EQ(k + i, x);
    EXPECT_TRUE(o.la->bracket(o.la->lambda_squared(), k).is_zero());
  }
}

TEST(LoopAlgebra, InvertOnE1) {
  Osp22 o;
  SPoly u = o.var("f1bar");
  LoopElem rhs = LoopElem::single(2, o["e1"], u);
  LoopElem x = o.la->invert_ad_lambda_sq(rhs);
  EXPECT_EQ(x, LoopElem::single(1, o["e1"], Rational(1, 2) * u));
  EXPECT_EQ(o.la->bracket(o.la->lambda_squared(), x), rhs);
  EXPECT_TRUE(o.la->invert_ad_lambda_sq(LoopElem()).is_zero());
}

TEST(LoopAlgebra, InvertIsTwoSided) {
  Osp22 o;
  SPoly u = o.var("h1bar");
  for (const char* n : {"e1", "f1", "e3", "f3"}) {
    LoopElem y = LoopElem::single(-1, o[n], u);
    LoopElem ad = o.la->bracket(o.la->lambda_squared(), y);
    EXPECT_EQ(o.la->invert_ad_lambda_sq(ad), y) << n;
  }
}

TEST(LoopAlgebra, KernelComponentIsRejected) {
  Osp22 o;
  EXPECT_THROW(o.la->invert_ad_lambda_sq(LoopElem::single(0, o["h1"], SPoly(1))), InvalidData);
}

TEST(LoopAlgebra, WindowOverflow) {
  Osp22 o(-1, 1);
  LoopElem x = LoopElem::single(1, o["e1"], SPoly(1));
  EXPECT_THROW(o.la->bracket(x, LoopElem::single(1, o["f1"], SPoly(1))), WindowOverflow);
  EXPECT_THROW(o.la->invert_ad_lambda_sq(LoopElem::single(-1, o["e1"], SPoly(1))), WindowOverflow);
}

TEST(LoopAlgebra, DerivationSign) {
  Osp22 o;
  SPoly u = o.var("e1bar");
  LoopElem x = LoopElem::single(0, o["e1"], u) + LoopElem::single(0, o["h1"], u);
  LoopElem d = o.la->D(x);
  EXPECT_EQ(d, LoopElem::single(0, o["e1"], -u.D()) + LoopElem::single(0, o["h1"], u.D()));
}

TEST(LoopAlgebra, PairingPicksOppositePowers) {
  Osp22 o;
  SPoly u = o.var("e1bar"), v = o.var("f1bar");
  LoopElem x = LoopElem::single(1, o["e1"], u), y = LoopElem::single(-1, o["f1"], v);
  EXPECT_EQ(o.la->pairing(x, y), Rational(-2) * u * v);
  EXPECT_TRUE(o.la->pairing(x, LoopElem::single(0, o["f1"], v)).is_zero());
}

TEST(LoopAlgebra, CentralLambdaSquared) {
  auto b = builtin("sl(n|n)/I", {{"n", {Rational(2)}}, {"A", {Rational(1), Rational(1)}}});
  auto g = std::make_shared<const LieSuperAlgebra>(b.algebra);
  auto rd = std::make_shared<const ReductionData>(make_reduction(g, b.reduction));
  LoopAlgebra la(rd, -3, 3);
  for (int grade = 0; grade < la.period(); ++grade) {
    const GradedPiece& p = la.piece(grade);
    EXPECT_TRUE(p.image.empty());
    EXPECT_EQ(p.kernel.size(), p.basis.size());
  }
}
