#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "spva/bracket_spec.hpp"
#include "spva/loopalg.hpp"

namespace spva {

// D + Q + f (x) 1, or D + Q + Lambda (x) 1 when with_s.
struct LaxOperator {
  LoopElem Q;
  bool with_s = false;
};

// Q_u = sum_t q^t (x) qbar_t over the b_- basis, in the affine variables.
LoopElem universal_Q(const ReductionData& rd);

// e^{ad N} L for even N in n (x) P.  Components that leave b are kept.
LaxOperator gauge_apply(const LoopAlgebra& la, const LoopElem& N, const LaxOperator& L);

// Projection P(g) -> P: abar goes to its b_- coordinates plus (f|m-part).
SPoly project(const ReductionData& rd, const SPoly& p);
ChiPoly project(const ReductionData& rd, const ChiPoly& p);

struct WPresentation {
  std::shared_ptr<const ReductionData> rd;
  VariableSetPtr vars;          // affine variables, then w_1 .. w_r
  LoopElem N;                   // e^{ad N} L_u = L^c
  LoopElem Qc;                  // sum_t V_t (x) w_t in the affine variables
  std::vector<Variable> w;
  std::vector<SPoly> expr;      // w_t in the qbar variables
  // Order-0 variables whose constant coefficients in expr form the
  // invertible matrix leader_matrix (row t = w_t).
  std::vector<Variable> leader;
  Matrix leader_matrix;

  std::unordered_map<std::uint32_t, SPoly> expansion() const;  // w_t -> expr
  SPoly expand(const SPoly& p) const;
  ChiPoly expand(const ChiPoly& p) const;
  LoopElem Qc_in_w() const;     // sum_t V_t (x) w_t with w as variables
};

// Grade by grade gauge fixing of L_u into V (x) P.  The w variables are
// added to vars (which must hold the affine variables).
WPresentation canonical_form(const LoopAlgebra& la, const VariableSetPtr& vars);

struct RewriteResult {
  SPoly value;     // polynomial in w (and any leftover variables)
  SPoly residual;  // terms still mentioning non-w variables; zero iff rewritable
  bool ok() const { return residual.is_zero(); }
};

// Expresses p (in qbar variables) through the w_t by eliminating leaders.
RewriteResult rewrite_in_w(const SPoly& p, const WPresentation& wp);
// Throws InvalidData with the residual when p is not expressible.
SPoly to_w(const SPoly& p, const WPresentation& wp);

struct InvarianceFailure {
  std::string n;  // basis vector of n
  ChiPoly residual;
};

// {nbar_chi p}_1 projected to P for each basis vector of n; empty when p is
// gauge invariant.
std::vector<InvarianceFailure> check_gauge_invariance(const SPoly& p, const WPresentation& wp, const BracketSpec& spec1);

// pi{a_chi b}_k for a, b in w-coordinates, rewritten in w.
ChiPoly reduced_bracket(const BracketSpec& spec, const WPresentation& wp, const SPoly& a, const SPoly& b);
// Generator table of the reduced bracket on w_1 .. w_r.
BracketSpec reduced_spec(const BracketSpec& spec, const WPresentation& wp);

}  // namespace spva
