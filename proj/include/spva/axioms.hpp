#pragma once

#include <string>
#include <vector>

#include "spva/bracket_spec.hpp"

namespace spva {

struct AxiomFailure {
  std::string axiom;                  // "skew-symmetry", "Jacobi", ...
  std::vector<std::string> generators;  // the pair or triple
  std::string residual;               // formatted nonzero residual
};

struct AxiomReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

// {u_i chi u_j} - (-1)^{p_i p_j} {u_j_{-chi-D} u_i} on every stored pair.
AxiomReport check_skew_symmetry(const BracketSpec& spec);

// The Jacobi residual on every ordered triple of generators, as a
// polynomial in chi and gamma.
AxiomReport check_jacobi(const BracketSpec& spec);

// Coefficients of eps^0, eps^1, eps^2 in the Jacobi residual of
// spec1 + eps spec2, plus skew-symmetry of both.
struct CompatibilityReport {
  AxiomReport skew;
  AxiomReport order0;
  AxiomReport order1;
  AxiomReport order2;
  bool ok() const { return skew.ok() && order0.ok() && order1.ok() && order2.ok(); }
};
CompatibilityReport check_compatibility(const BracketSpec& spec1, const BracketSpec& spec2);

// Mixed residual J(outer, inner) on one triple.
ChiGammaPoly jacobi_residual(const BracketSpec& outer, const BracketSpec& inner, std::size_t i, std::size_t j,
                             std::size_t k);

}  // namespace spva
