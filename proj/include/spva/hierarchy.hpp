#pragma once

#include <string>
#include <vector>

#include "spva/bracket.hpp"
#include "spva/dsred.hpp"

namespace spva {

// e^{ad T} X truncated at max_grade; sign = -1 gives e^{-ad T}.
LoopElem exp_ad(const LoopAlgebra& la, const LoopElem& T, const LoopElem& X, int max_grade, int sign = 1);
// e^{ad T} D - D = sum_{n>=1} (ad T)^{n-1}(-[D,T]) / n!, truncated.
LoopElem exp_ad_on_D(const LoopAlgebra& la, const LoopElem& T, int max_grade);
// sum_{n>=1} (ad T)^{n-1}(-dT/dx) / n!, the image of D^2.
LoopElem exp_ad_on_D2(const LoopAlgebra& la, const LoopElem& T, int max_grade);
LoopElem shift_z(const LoopElem& x, int n);

// Solution of e^{ad T}[L_s, L_s]/2 = D^2 + H + Lambda^2 with T in I (x) P
// (grades 1..cutoff) and H in K (x) P, and K from e^{ad T} L_s = D + K + Lambda.
struct DressingResult {
  LoopElem Q;
  LoopElem T;
  LoopElem H;
  LoopElem K;
  int cutoff = 0;   // T known through this grade
  int k_valid = 0;  // K exact through this grade
};

DressingResult dressing(const LoopAlgebra& la, const LoopElem& Q, int cutoff);
// Cutoff for which K reaches the grade paired with C z^n.
int cutoff_for(const LoopAlgebra& la, const LoopElem& C, int n);

// Throws InvalidData unless C z^n lies in the computed center.
void check_center(const LoopAlgebra& la, const LoopElem& C, int n);

// int (K | C z^n)
Functional hamiltonian_h(const LoopAlgebra& la, const DressingResult& dr, const LoopElem& C, int n);
// Linear plus quadratic part int (Q_K | C z^n) + 1/2 int (Q_I | [C z^n, T_l]).
Functional quadratic_part(const LoopAlgebra& la, const DressingResult& dr, const LoopElem& C, int n);

// M = e^{-ad T}(C z^n) through max_grade; the dressing must reach
// max_grade - grade(C z^n).
LoopElem lax_M(const LoopAlgebra& la, const DressingResult& dr, const LoopElem& C, int n, int max_grade);
LoopElem holomorphic_part(const LoopElem& M);  // z-powers >= 0

// Coordinates x_t of X = sum_t q^t (x) x_t in b (x) P; throws if X leaves b.
std::vector<SPoly> b_coordinates(const ReductionData& rd, const LoopElem& X);

// d/dt_C qbar_t from the Lax form -[M^+_{z^{-1}C}, L_s] on the universal
// operator, with the sign of the extended derivation removed.
std::vector<SPoly> lax_flow(const LoopAlgebra& la, const DressingResult& universal, const LoopElem& C, int n);
// d/dt_C qbar_t = {int h_C chi qbar_t}_2 |_{chi=0} in the affine variables.
std::vector<SPoly> bracket_flow(const LoopAlgebra& la, const BracketSpec& affine2, const Functional& h);

// sum_t q_t (x) delta phi / delta qbar_t
LoopElem gradient(const ReductionData& rd, const SPoly& phi);
// -int (grad phi | [L, grad psi]) with L = L_u or L_s, and
// int (grad phi | [s, grad psi]) or the z^{-1} L_s form for the second.
Functional lax_bracket_1(const LoopAlgebra& la, const SPoly& phi, const SPoly& psi, bool with_s);
Functional lax_bracket_2(const LoopAlgebra& la, const SPoly& phi, const SPoly& psi, bool z_form);

// Hierarchy on the W-algebra of a canonical form.
struct WHierarchy {
  const LoopAlgebra* la = nullptr;
  const WPresentation* wp = nullptr;
  BracketSpec spec1;  // reduced, on w
  BracketSpec spec2;
  LoopElem C;
  DressingResult dressed;       // of Q^c in w-variables
  std::vector<Functional> h;    // int h_{z^n C}, n = 0 .. depth + 1

  SPoly flow(int n, const SPoly& a) const;         // {int h_n chi a}_1 |_0
  SPoly flow_second(int n, const SPoly& a) const;  // {int h_{n+1} chi a}_2 |_0
};

WHierarchy make_w_hierarchy(const LoopAlgebra& la, const WPresentation& wp, const BracketSpec& spec1,
                            const BracketSpec& spec2, const LoopElem& C, int depth);

struct HierarchyCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

// Involution for both brackets, supercommuting flows on the generators,
// conservation, bi-Hamiltonian ladder and independence of quadratic parts.
std::vector<HierarchyCheck> check_hierarchy(const WHierarchy& wh, int depth);

}  // namespace spva
