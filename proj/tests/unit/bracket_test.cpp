#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "random_poly.hpp"
#include "spva/axioms.hpp"
#include "spva/bracket.hpp"
#include "spva/text.hpp"

using namespace spva;

namespace {

const char* kNS = R"(
odd psi
{psi, psi} = psi'' - 3/2*X^2*psi + 1/2*X*psi' - X^5
)";

BracketSpec ns(VariableSetPtr& vars) {
  vars = std::make_shared<VariableSet>();
  return parse_bracket_spec(kNS, vars);
}

}  // namespace

TEST(BracketSpec, NeveuSchwarzIsSkew) {
  VariableSetPtr vars;
  auto spec = ns(vars);
  EXPECT_TRUE(check_skew_symmetry(spec).ok());
}

TEST(BracketSpec, RejectsWrongParity) {
  auto vars = std::make_shared<VariableSet>();
  EXPECT_THROW(parse_bracket_spec("odd psi\n{psi, psi} = 1\n", vars), ParseError);
}

TEST(BracketSpec, RejectsDoubleEntry) {
  auto vars = std::make_shared<VariableSet>();
  EXPECT_THROW(parse_bracket_spec("even u v\n{u, v} = 0\n{u, v} = X*u\n", vars), ParseError);
  auto vars2 = std::make_shared<VariableSet>();
  EXPECT_THROW(parse_bracket_spec("even u v\n{u, v} = X*u\n{v, u} = X*u\n", vars2), ParseError);
}

TEST(Bracket, SuperKdVFlow) {
  VariableSetPtr vars;
  auto spec = ns(vars);
  SPoly h = parse_spoly("psi*psi'", *vars);
  SPoly flow = hamiltonian_flow(spec, h, parse_spoly("psi", *vars));
  // the central term -X^5 contributes -2 psi^(6)
  EXPECT_EQ(flow, parse_spoly("-2*psi^(6) + 3*psi''*psi' + 3*psi*psi'''", *vars));
}

TEST(Bracket, SelfBracketOfOddFunctionalVanishes) {
  VariableSetPtr vars;
  auto spec = ns(vars);
  Functional h(parse_spoly("psi*psi'", *vars));
  EXPECT_TRUE(induced_bracket(spec, h, h).is_zero());
}

TEST(Bracket, MasterMatchesOracle) {
  auto vars = std::make_shared<VariableSet>();
  auto spec = parse_bracket_spec(kNS, vars);
  std::mt19937 rng(1);
  std::vector<Variable> g = spec.generators();
  for (int trial = 0; trial < 30; ++trial) {
    SPoly a = ref::random_poly(rng, g, 3, 3, 3);
    SPoly b = ref::random_poly(rng, g, 3, 3, 3);
    EXPECT_EQ(master_bracket(spec, a, b), ref::oracle_bracket(spec, a, b))
        << format(a, *vars) << " , " << format(b, *vars);
  }
}

TEST(Bracket, Sesquilinearity) {
  VariableSetPtr vars;
  auto spec = ns(vars);
  std::mt19937 rng(2);
  std::vector<Variable> g = spec.generators();
  for (int trial = 0; trial < 20; ++trial) {
    for (Parity pa : {Parity::Even, Parity::Odd}) {
      SPoly a = ref::random_homogeneous(rng, g, 3, 3, 2, pa);
      SPoly b = ref::random_poly(rng, g, 3, 3, 2);
      EXPECT_EQ(master_bracket(spec, a.D(), b), master_bracket(spec, a, b).chi());
      ChiPoly rhs = master_bracket(spec, a, b).chi_plus_D();
      if (pa == Parity::Even) rhs = -rhs;
      EXPECT_EQ(master_bracket(spec, a, b.D()), rhs);
    }
  }
}

TEST(Axioms, NeveuSchwarzPasses) {
  VariableSetPtr vars;
  auto spec = ns(vars);
  EXPECT_TRUE(check_jacobi(spec).ok());
}

TEST(Axioms, PerturbedCentralTermFails) {
  auto vars = std::make_shared<VariableSet>();
  auto spec = parse_bracket_spec("odd psi\n{psi, psi} = psi'' - 3/2*X^2*psi + 1/2*X*psi' - X^3\n", vars);
  EXPECT_FALSE(check_skew_symmetry(spec).ok() && check_jacobi(spec).ok());
}

TEST(Axioms, NonSkewSelfBracketReportsResidual) {
  auto vars = std::make_shared<VariableSet>();
  auto spec = parse_bracket_spec("odd u\n{u, u} = u\n", vars);
  auto r = check_skew_symmetry(spec);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].residual, "2*u");
}

TEST(Axioms, CompatibleWithItself) {
  VariableSetPtr vars;
  auto spec = ns(vars);
  EXPECT_TRUE(check_compatibility(spec, spec).ok());
}
