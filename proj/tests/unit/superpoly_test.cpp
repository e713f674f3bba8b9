#include <gtest/gtest.h>

#include <random>

#include "random_poly.hpp"
#include "spva/functional.hpp"
#include "spva/text.hpp"

using namespace spva;

namespace {

struct Ring {
  VariableSet vars;
  Variable psi = vars.add("psi", Parity::Odd);
  Variable u = vars.add("u", Parity::Even);
  Variable phi = vars.add("phi", Parity::Odd);
  Variable v = vars.add("v", Parity::Even);
  SPoly p(const std::string& s) const { return parse_spoly(s, vars); }
  std::string f(const SPoly& x) const { return format(x, vars); }
};

}  // namespace

TEST(SuperPoly, OddSquareVanishes) {
  Ring r;
  EXPECT_TRUE((r.p("psi") * r.p("psi")).is_zero());
  EXPECT_TRUE((r.p("psi'' * u") * r.p("psi''")).is_zero());
  EXPECT_FALSE((r.p("psi'") * r.p("psi'")).is_zero());
}

TEST(SuperPoly, Supercommutation) {
  Ring r;
  EXPECT_EQ(r.p("psi*phi"), -r.p("phi*psi"));
  EXPECT_EQ(r.p("psi*u"), r.p("u*psi"));
  EXPECT_EQ(r.p("phi*psi'*psi"), r.p("psi*phi*psi'") * Rational(-1));
}

TEST(SuperPoly, DerivationOfProduct) {
  Ring r;
  EXPECT_EQ(r.p("psi*psi'").D(), r.p("psi'^2 - psi*psi''"));
  EXPECT_EQ(r.p("u^3").D(), r.p("3*u^2*u'"));
  EXPECT_EQ(r.p("psi").D(2), r.p("psi''"));
}

TEST(SuperPoly, PartialIsLeftDerivative) {
  Ring r;
  EXPECT_EQ(r.p("psi*psi'").partial(r.psi, 0), r.p("psi'"));
  EXPECT_EQ(r.p("phi*psi").partial(r.psi, 0), r.p("-phi"));
  EXPECT_EQ(r.p("u^2*psi").partial(r.u, 0), r.p("2*u*psi"));
}

TEST(SuperPoly, VariationalDerivatives) {
  Ring r;
  EXPECT_EQ(r.p("psi*psi'").variational(r.psi), r.p("2*psi'"));
  EXPECT_EQ(r.p("u^2").variational(r.u), r.p("2*u"));
}

TEST(SuperPoly, PartialCommutatorWithD) {
  Ring r;
  std::mt19937 rng(7);
  std::vector<Variable> vs{r.psi, r.u, r.phi};
  for (int trial = 0; trial < 40; ++trial) {
    SPoly a = ref::random_poly(rng, vs, 4, 3, 3);
    for (auto x : vs) {
      for (unsigned m = 1; m <= 3; ++m) {
        // [d/du^(m), D] = d/du^(m-1), supercommutator of a derivation of
        // parity p(u)+m with the odd D
        Parity pd = x.parity + parity_of(m);
        SPoly lhs = a.D().partial(x, m);
        SPoly rhs = a.partial(x, m).D();
        lhs = pd == Parity::Odd ? lhs + rhs : lhs - rhs;
        EXPECT_EQ(lhs, a.partial(x, m - 1)) << r.f(a);
      }
    }
  }
}

TEST(SuperPoly, VariationalKillsTotalDerivatives) {
  Ring r;
  std::mt19937 rng(11);
  std::vector<Variable> vs{r.psi, r.u, r.phi, r.v};
  for (int trial = 0; trial < 60; ++trial) {
    SPoly a = ref::random_poly(rng, vs, 4, 3, 2).D();
    for (auto x : vs) EXPECT_TRUE(a.variational(x).is_zero()) << r.f(a);
  }
}

TEST(SuperPoly, TextRoundTrip) {
  Ring r;
  std::mt19937 rng(3);
  std::vector<Variable> vs{r.psi, r.u, r.phi, r.v};
  for (int trial = 0; trial < 50; ++trial) {
    SPoly a = ref::random_poly(rng, vs, 5, 3, 5) * Rational(2, 3);
    EXPECT_EQ(r.p(r.f(a)), a) << r.f(a);
  }
  EXPECT_EQ(r.f(r.p("u^(4)*psi^(5) - 1/2")), "-1/2 + psi^(5)*u^(4)");
}

TEST(SuperPoly, ParseErrorsCarryPosition) {
  Ring r;
  try {
    r.p("u + w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_THROW(r.p("u +"), ParseError);
  EXPECT_THROW(r.p("1/0"), ParseError);
}

TEST(Functional, ExactTermsVanish) {
  Ring r;
  EXPECT_TRUE(Functional(r.p("u*u'")).is_zero());
  EXPECT_FALSE(Functional(r.p("psi*psi'")).is_zero());
  EXPECT_FALSE(Functional(r.p("1")).is_zero());
  EXPECT_EQ(Functional(r.p("u''*v")), -Functional(r.p("u*v''")));
  EXPECT_EQ(Functional(r.p("psi'*phi")), Functional(r.p("psi*phi'")));
}

TEST(Functional, NormalFormIsCanonical) {
  Ring r;
  std::mt19937 rng(5);
  std::vector<Variable> vs{r.psi, r.u, r.phi, r.v};
  for (int trial = 0; trial < 60; ++trial) {
    SPoly a = ref::random_poly(rng, vs, 4, 3, 3);
    SPoly b = ref::random_poly(rng, vs, 4, 3, 3);
    EXPECT_EQ(functional_normal_form(a + b.D()), functional_normal_form(a)) << r.f(a) << " / " << r.f(b);
  }
}

TEST(Functional, AgreesWithVariationalTest) {
  Ring r;
  std::mt19937 rng(13);
  std::vector<Variable> vs{r.psi, r.u, r.phi};
  int zeros = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SPoly a = ref::random_poly(rng, vs, 3, 3, 2);
    if (trial % 3 == 0) a = a.D();
    bool z = Functional(a).is_zero();
    zeros += z;
    EXPECT_EQ(z, functional_zero_by_variation(a)) << r.f(a);
  }
  EXPECT_GT(zeros, 10);
}
