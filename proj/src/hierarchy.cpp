#include "spva/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "spva/errors.hpp"
#include "spva/text.hpp"

namespace spva {

namespace {

LoopElem scaled(LoopElem x, const Rational& q) { return x *= q; }

LoopElem series(const LoopAlgebra& la, const LoopElem& T, LoopElem first, int max_grade, int sign, int start) {
  LoopElem acc;
  LoopElem term = la.truncate(first, max_grade);
  Rational fact = 1;
  for (int n = start; !term.is_zero(); ++n) {
    if (n > 0) fact *= n;
    acc += scaled(term, Rational(1) / fact);
    term = la.bracket(T, term, max_grade);
    if (sign < 0) term = -term;
  }
  return acc;
}

Parity functional_parity(const Functional& f) { return f.density().parity_or_even(); }

}  // namespace

LoopElem shift_z(const LoopElem& x, int n) {
  LoopElem r;
  for (const auto& [k, u] : x.terms()) r.add(k.first + n, k.second, u);
  return r;
}

LoopElem exp_ad(const LoopAlgebra& la, const LoopElem& T, const LoopElem& X, int max_grade, int sign) {
  return series(la, T, X, max_grade, sign, 0);
}

LoopElem exp_ad_on_D(const LoopAlgebra& la, const LoopElem& T, int max_grade) {
  return series(la, T, -la.D(T), max_grade, 1, 1);
}

LoopElem exp_ad_on_D2(const LoopAlgebra& la, const LoopElem& T, int max_grade) {
  return series(la, T, -la.D(la.D(T)), max_grade, 1, 1);
}

DressingResult dressing(const LoopAlgebra& la, const LoopElem& Q, int cutoff) {
  if (cutoff < 1) throw InvalidData("dressing cutoff must be at least 1");
  const int i = la.reduction().i;
  DressingResult dr;
  dr.Q = Q;
  dr.cutoff = cutoff;
  dr.k_valid = cutoff - i;
  LoopElem Y = Q + la.lambda();
  const int top = -2 * i + cutoff;
  LoopElem W = la.truncate(la.D(Y) + scaled(la.bracket(Y, Y, top), Rational(1, 2)), top);
  LoopElem lsq = la.lambda_squared();
  if (la.grade_part(W, -2 * i) != lsq || (!W.is_zero() && la.grade_range(W).first < -2 * i))
    throw InvalidData("[L_s, L_s]/2 has components below Lambda^2");
  for (int k = 1; k <= cutoff; ++k) {
    const int g = -2 * i + k;
    LoopElem E = la.grade_part(exp_ad(la, dr.T, W, g) + exp_ad_on_D2(la, dr.T, g), g);
    auto [kp, ip] = la.split(E);
    dr.H += kp;
    dr.T += la.invert_ad_lambda_sq(ip);
  }
  dr.K = la.truncate(exp_ad(la, dr.T, Y, dr.k_valid) + exp_ad_on_D(la, dr.T, dr.k_valid), dr.k_valid) - la.lambda();
  if (!la.split(dr.K).second.is_zero()) throw InvalidData("dressed operator leaves the kernel of ad Lambda^2");
  return dr;
}

int cutoff_for(const LoopAlgebra& la, const LoopElem& C, int n) {
  auto [lo, hi] = la.grade_range(shift_z(C, n));
  return std::max(1, -lo + la.reduction().i);
}

void check_center(const LoopAlgebra& la, const LoopElem& C, int n) {
  LoopElem x = shift_z(C, n);
  if (x.is_zero()) throw InvalidData("C is zero");
  auto [lo, hi] = la.grade_range(x);
  if (lo != hi) throw InvalidData("C is not homogeneous");
  const GradedPiece& p = la.piece(lo);
  Vec v(p.basis.size());
  for (const auto& [k, u] : x.terms()) {
    if (u.size() > 1 || (u.size() == 1 && !u.terms()[0].first.empty()))
      throw InvalidData("C must have constant coefficients");
    v[p.index.at(k)] = u.constant_term();
  }
  if (!Subspace(v.size(), p.center).contains(v)) throw InvalidData("C z^n is not in the center of the kernel");
}

Functional hamiltonian_h(const LoopAlgebra& la, const DressingResult& dr, const LoopElem& C, int n) {
  check_center(la, C, n);
  LoopElem x = shift_z(C, n);
  auto [lo, hi] = la.grade_range(x);
  if (-lo > dr.k_valid)
    throw InvalidData("dressing cutoff " + std::to_string(dr.cutoff) + " too small for z^" + std::to_string(n));
  return Functional(la.pairing(dr.K, x));
}

Functional quadratic_part(const LoopAlgebra& la, const DressingResult& dr, const LoopElem& C, int n) {
  LoopElem x = shift_z(C, n);
  auto [qk, qi] = la.split(dr.Q);
  LoopElem tl = dr.T.homogeneous_part(1);
  SPoly d = la.pairing(qk, x) + la.pairing(qi, la.bracket(x, tl)) * Rational(1, 2);
  return Functional(d);
}

LoopElem lax_M(const LoopAlgebra& la, const DressingResult& dr, const LoopElem& C, int n, int max_grade) {
  LoopElem x = shift_z(C, n);
  auto [lo, hi] = la.grade_range(x);
  if (max_grade - lo > dr.cutoff)
    throw InvalidData("dressing cutoff " + std::to_string(dr.cutoff) + " too small for M through grade " +
                      std::to_string(max_grade));
  return exp_ad(la, la.truncate(dr.T, max_grade - lo), x, max_grade, -1);
}

LoopElem holomorphic_part(const LoopElem& M) {
  LoopElem r;
  for (const auto& [k, u] : M.terms())
    if (k.first >= 0) r.add(k.first, k.second, u);
  return r;
}

std::vector<SPoly> b_coordinates(const ReductionData& rd, const LoopElem& X) {
  const std::size_t dim = rd.g().dim();
  std::vector<SPoly> x(dim);
  for (const auto& [k, u] : X.terms()) {
    if (k.first != 0) throw InvalidData("element has a nonzero z-power");
    x[k.second] = u;
  }
  Subspace b(dim, rd.bdual);
  auto c = apply_matrix(b.left_inverse(), x);
  if (apply_matrix(b.matrix(), c) != x) throw InvalidData("element is not in b");
  // Subspace keeps an independent subset in the given order; bdual is a basis.
  return c;
}

std::vector<SPoly> lax_flow(const LoopAlgebra& la, const DressingResult& universal, const LoopElem& C, int n) {
  const ReductionData& rd = la.reduction();
  int dmax = 0;
  for (std::size_t a = 0; a < rd.g().dim(); ++a) dmax = std::max(dmax, rd.g().degree(a));
  LoopElem Mp = holomorphic_part(lax_M(la, universal, C, n - 1, dmax));
  Parity pc = C.is_zero() ? Parity::Even : rd.g().parity(C.terms().begin()->first.second);
  LoopElem DM = la.D(Mp);
  if (pc == Parity::Even) DM = -DM;
  LoopElem comm = DM + la.bracket(Mp, universal.Q + la.lambda());
  auto c = b_coordinates(rd, -comm);
  for (std::size_t t = 0; t < c.size(); ++t)
    if (pc == Parity::Odd && rd.g().parity(rd.bdual[t]) == Parity::Odd) c[t] = -c[t];
  return c;
}

std::vector<SPoly> bracket_flow(const LoopAlgebra& la, const BracketSpec& affine2, const Functional& h) {
  const ReductionData& rd = la.reduction();
  std::vector<SPoly> out;
  for (auto a : rd.bminus)
    out.push_back(hamiltonian_flow(affine2, h, SPoly::var({static_cast<std::uint32_t>(a), flip(rd.g().parity(a))})));
  return out;
}

LoopElem gradient(const ReductionData& rd, const SPoly& phi) {
  LoopElem g;
  for (auto a : rd.bminus)
    g.add(0, a, phi.variational({static_cast<std::uint32_t>(a), flip(rd.g().parity(a))}));
  return g;
}

Functional lax_bracket_1(const LoopAlgebra& la, const SPoly& phi, const SPoly& psi, bool with_s) {
  const ReductionData& rd = la.reduction();
  LoopElem Y = universal_Q(rd) + (with_s ? la.lambda() : LoopElem::constant(0, rd.f));
  LoopElem gpsi = gradient(rd, psi);
  LoopElem comm = la.D(gpsi) + la.bracket(Y, gpsi);
  return Functional(-la.pairing(gradient(rd, phi), comm));
}

Functional lax_bracket_2(const LoopAlgebra& la, const SPoly& phi, const SPoly& psi, bool z_form) {
  const ReductionData& rd = la.reduction();
  LoopElem gpsi = gradient(rd, psi);
  LoopElem comm;
  if (z_form) {
    LoopElem Y = shift_z(universal_Q(rd) + la.lambda(), -1);
    comm = shift_z(la.D(gpsi), -1) + la.bracket(Y, gpsi);
  } else {
    comm = la.bracket(LoopElem::constant(0, rd.s), gpsi);
  }
  return Functional(la.pairing(gradient(rd, phi), comm));
}

SPoly WHierarchy::flow(int n, const SPoly& a) const { return hamiltonian_flow(spec1, h.at(n), a); }

SPoly WHierarchy::flow_second(int n, const SPoly& a) const { return hamiltonian_flow(spec2, h.at(n + 1), a); }

WHierarchy make_w_hierarchy(const LoopAlgebra& la, const WPresentation& wp, const BracketSpec& spec1,
                            const BracketSpec& spec2, const LoopElem& C, int depth) {
  WHierarchy wh;
  wh.la = &la;
  wh.wp = &wp;
  wh.spec1 = spec1;
  wh.spec2 = spec2;
  wh.C = C;
  wh.dressed = dressing(la, wp.Qc_in_w(), cutoff_for(la, C, depth + 1));
  for (int n = 0; n <= depth + 1; ++n) wh.h.push_back(hamiltonian_h(la, wh.dressed, C, n));
  return wh;
}

std::vector<HierarchyCheck> check_hierarchy(const WHierarchy& wh, int depth) {
  std::vector<HierarchyCheck> out;
  const VariableSet& vars = *wh.wp->vars;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) { out.push_back({name, ok, ok ? "" : detail}); };

  for (int which : {1, 2}) {
    const BracketSpec& spec = which == 1 ? wh.spec1 : wh.spec2;
    bool ok = true;
    std::string w;
    for (int m = 0; m <= depth && ok; ++m)
      for (int n = m; n <= depth && ok; ++n) {
        Functional r = induced_bracket(spec, wh.h[m], wh.h[n]);
        if (!r.is_zero()) {
          ok = false;
          w = "{h" + std::to_string(m) + ", h" + std::to_string(n) + "} = " + format(r.density(), vars);
        }
      }
    add(which == 1 ? "hamiltonians in involution (first bracket)" : "hamiltonians in involution (second bracket)", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n <= depth && ok; ++n)
      for (const Variable& v : wh.wp->w) {
        SPoly a = wh.flow(n, SPoly::var(v)), b = wh.flow_second(n, SPoly::var(v));
        if (a != b) {
          ok = false;
          w = "t" + std::to_string(n) + " on " + vars.name(v.id) + ": " + format(a - b, vars);
          break;
        }
      }
    add("bi-Hamiltonian ladder", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m <= depth && ok; ++m)
      for (int n = m + 1; n <= depth && ok; ++n) {
        Parity pm = flip(functional_parity(wh.h[m])), pn = flip(functional_parity(wh.h[n]));
        for (const Variable& v : wh.wp->w) {
          SPoly x = SPoly::var(v);
          SPoly r = wh.flow(m, wh.flow(n, x)) - wh.flow(n, wh.flow(m, x)) * Rational(sign(bit(pm) * bit(pn)));
          if (!r.is_zero()) {
            ok = false;
            w = "[t" + std::to_string(m) + ", t" + std::to_string(n) + "] on " + vars.name(v.id) + ": " + format(r, vars);
            break;
          }
        }
      }
    add("flows supercommute", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int k = 0; k <= depth && ok; ++k)
      for (int n = 0; n <= depth && ok; ++n) {
        Functional r(wh.flow(n, wh.h[k].density()));
        if (!r.is_zero()) {
          ok = false;
          w = "d/dt" + std::to_string(n) + " h" + std::to_string(k) + " = " + format(r.density(), vars);
        }
      }
    add("hamiltonians conserved", ok, w);
  }
  {
    std::vector<Functional> q;
    for (int n = 0; n <= depth; ++n) q.push_back(quadratic_part(*wh.la, wh.dressed, wh.C, n));
    std::map<Monomial, std::size_t> col;
    for (const auto& f : q)
      for (const auto& [m, c] : f.density().terms()) col.emplace(m, col.size());
    Matrix mat(col.size(), q.size());
    for (std::size_t j = 0; j < q.size(); ++j)
      for (const auto& [m, c] : q[j].density().terms()) mat(col[m], j) = c;
    add("quadratic parts linearly independent", rank(mat) == q.size(), "rank " + std::to_string(rank(mat)));
  }
  return out;
}

}  // namespace spva
