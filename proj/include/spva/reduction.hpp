#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spva/bracket_spec.hpp"
#include "spva/lie_superalgebra.hpp"

namespace spva {

// User-facing choice of (n, m, f, s) and optionally V and the basis
// elements spanning b_-.
struct ReductionInput {
  std::vector<Vec> n;
  std::vector<Vec> m;
  Vec f;
  Vec s;
  std::optional<std::vector<Vec>> V;
  std::optional<std::vector<std::size_t>> bminus;
};

// The tuple (g, n, m, b, b_-, f, s) with dual bases.  b_- is spanned by basis
// elements of g (q_t, t in I), so that the differential generators of P are
// the parity-reversed basis elements; q^t is the dual basis of b.
struct ReductionData {
  LieSuperAlgebraPtr algebra;
  Subspace n;
  Subspace m;
  Vec f;
  Vec s;
  int i = 0;
  int j = 0;
  std::vector<std::size_t> bminus;  // q_t
  std::vector<Vec> bdual;           // q^t, (q^t|q_t') = delta
  std::vector<Vec> fn;              // basis of [f, n]
  std::vector<Vec> V;               // complement of [f, n] in b
  // Coordinates of each basis element of g in (q_t..., m basis...).
  std::vector<Vec> split;

  const LieSuperAlgebra& g() const { return *algebra; }
  int z_degree() const { return -i - j; }
  // (f|m) for the m-component of basis element a, i.e. the constant that
  // the projection to P adds for a.
  Rational m_constant(std::size_t a) const;
};

// Computes everything derivable from the input; structural problems that
// prevent the computation (wrong sizes, zero f, m not complemented by the
// requested basis elements) throw InvalidData.  Reduction assumptions are
// checked separately.
ReductionData make_reduction(LieSuperAlgebraPtr g, const ReductionInput& in);

// Parities and degrees of f and s, n a graded subalgebra of g_{>0}, m a
// graded n-submodule of n, dual bases, b the orthogonal of m, V + [f,n] = b,
// and the assumptions A-1 .. A-4.
ValidationReport validate_reduction(const ReductionData& rd);

// Differential generators abar for every basis element a of g, with ids
// equal to basis indices and parity p(a)+1.
VariableSetPtr affine_variables(const LieSuperAlgebra& g);

// {abar_chi bbar}_1 = (-1)^{p(a)} ([a,b]bar + chi (a|b)) when which == 1,
// {abar_chi bbar}_2 = (-1)^{p(a)+1} (s|[a,b]) when which == 2 (s odd).
BracketSpec affine_spec(const LieSuperAlgebra& g, int which, const VariableSetPtr& vars, const Vec& s = {});

}  // namespace spva
