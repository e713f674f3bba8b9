#include "spva/dsred.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spva/bracket.hpp"
#include "spva/errors.hpp"
#include "spva/text.hpp"

namespace spva {

namespace {

Variable affine_var(const LieSuperAlgebra& g, std::size_t a) {
  return {static_cast<std::uint32_t>(a), flip(g.parity(a))};
}

template <class F>
ChiPoly map_coeffs(const ChiPoly& p, F f) {
  ChiPoly r;
  for (int n = 0; n <= p.degree(); ++n) r.add_term(n, f(p.coeff(n)));
  return r;
}

bool mentions(const SPoly& p, std::uint32_t id) {
  auto v = p.variables();
  return std::binary_search(v.begin(), v.end(), id);
}

// Coefficient vector of grade-0-in-z element x over the basis of g.
std::vector<SPoly> g_coords(const LoopElem& x, std::size_t dim, std::optional<int> degree, const LieSuperAlgebra& g) {
  std::vector<SPoly> v(dim);
  for (const auto& [k, u] : x.terms()) {
    if (k.first != 0) throw InvalidData("Lax operator has a nonzero z-power");
    if (!degree || g.degree(k.second) == *degree) v[k.second] = u;
  }
  return v;
}

bool all_zero(const std::vector<SPoly>& v) {
  return std::all_of(v.begin(), v.end(), [](const SPoly& p) { return p.is_zero(); });
}

}  // namespace

LoopElem universal_Q(const ReductionData& rd) {
  LoopElem q;
  for (std::size_t t = 0; t < rd.bminus.size(); ++t)
    q += LoopElem::constant(0, rd.bdual[t], SPoly::var(affine_var(rd.g(), rd.bminus[t])));
  return q;
}

LaxOperator gauge_apply(const LoopAlgebra& la, const LoopElem& N, const LaxOperator& L) {
  LoopElem base = L.with_s ? la.lambda() : LoopElem::constant(0, la.reduction().f);
  LoopElem Y = L.Q + base;
  LoopElem term = la.bracket(N, Y) - la.D(N);
  LoopElem acc;
  Rational fact = 1;
  for (int k = 1; !term.is_zero(); ++k) {
    fact *= k;
    LoopElem t = term;
    t *= Rational(1) / fact;
    acc += t;
    term = la.bracket(N, term);
    if (k > 64) throw InvalidData("gauge series does not terminate; N is not nilpotent");
  }
  return {L.Q + acc, L.with_s};
}

SPoly project(const ReductionData& rd, const SPoly& p) {
  const LieSuperAlgebra& g = rd.g();
  std::set<std::size_t> in_bminus(rd.bminus.begin(), rd.bminus.end());
  std::unordered_map<std::uint32_t, SPoly> map;
  for (std::uint32_t a : p.variables()) {
    if (a >= g.dim() || in_bminus.count(a)) continue;
    SPoly img(rd.m_constant(a));
    for (std::size_t t = 0; t < rd.bminus.size(); ++t)
      if (rd.split[a][t] != 0) img += SPoly::var(affine_var(g, rd.bminus[t])) * rd.split[a][t];
    map.emplace(a, img);
  }
  return map.empty() ? p : p.substitute(map);
}

ChiPoly project(const ReductionData& rd, const ChiPoly& p) {
  return map_coeffs(p, [&](const SPoly& c) { return project(rd, c); });
}

std::unordered_map<std::uint32_t, SPoly> WPresentation::expansion() const {
  std::unordered_map<std::uint32_t, SPoly> m;
  for (std::size_t t = 0; t < w.size(); ++t) m.emplace(w[t].id, expr[t]);
  return m;
}

SPoly WPresentation::expand(const SPoly& p) const { return p.substitute(expansion()); }

ChiPoly WPresentation::expand(const ChiPoly& p) const {
  auto m = expansion();
  return map_coeffs(p, [&](const SPoly& c) { return c.substitute(m); });
}

LoopElem WPresentation::Qc_in_w() const {
  LoopElem q;
  for (std::size_t t = 0; t < w.size(); ++t) q += LoopElem::constant(0, rd->V[t], SPoly::var(w[t]));
  return q;
}

WPresentation canonical_form(const LoopAlgebra& la, const VariableSetPtr& vars) {
  const ReductionData& rd = la.reduction();
  const LieSuperAlgebra& g = rd.g();
  const std::size_t dim = g.dim();
  if (vars->size() < dim) throw InvalidData("variable set does not hold the affine variables");

  std::vector<Vec> vfn = rd.V;
  vfn.insert(vfn.end(), rd.fn.begin(), rd.fn.end());
  Subspace b(dim, vfn);
  if (b.dim() != vfn.size()) throw InvalidData("V and [f,n] are not independent");

  int dmin = g.degree(0), dmax = dmin;
  for (std::size_t a = 0; a < dim; ++a) {
    dmin = std::min(dmin, g.degree(a));
    dmax = std::max(dmax, g.degree(a));
  }

  LaxOperator Lu{universal_Q(rd), false};
  LoopElem N;
  LaxOperator L = Lu;
  for (bool changed = true; changed;) {
    changed = false;
    L = gauge_apply(la, N, Lu);
    for (int t = dmin; t <= dmax && !changed; ++t) {
      auto x = g_coords(L.Q, dim, t, g);
      if (all_zero(x)) continue;
      auto c = apply_matrix(b.left_inverse(), x);
      if (apply_matrix(b.matrix(), c) != x) throw InvalidData("gauge transform left b at degree " + std::to_string(t));
      std::vector<SPoly> perp(dim);
      bool any = false;
      for (std::size_t r = rd.V.size(); r < c.size(); ++r) {
        if (c[r].is_zero()) continue;
        any = true;
        for (std::size_t a = 0; a < dim; ++a)
          if (vfn[r][a] != 0) perp[a] -= c[r] * vfn[r][a];
      }
      if (!any) continue;
      // sum_a (-1)^{p(n_a)} [n_a, f] u_a = -X_perp over n_a of degree t + i.
      std::vector<Vec> na, cols;
      for (const auto& v : rd.n.basis()) {
        if (g.degree(v) != t + rd.i) continue;
        Vec col = g.bracket(v, rd.f);
        if (g.parity(v) == Parity::Odd) col = Rational(-1) * col;
        na.push_back(v);
        cols.push_back(col);
      }
      auto linv = cols.empty() ? std::nullopt : left_inverse(Matrix::from_columns(cols, dim));
      if (!linv) throw InvalidData("ad f is not injective on n at degree " + std::to_string(t + rd.i));
      auto u = apply_matrix(*linv, perp);
      if (apply_matrix(Matrix::from_columns(cols, dim), u) != perp)
        throw InvalidData("[f,n] component not reachable at degree " + std::to_string(t));
      for (std::size_t a = 0; a < na.size(); ++a) N += LoopElem::constant(0, na[a], u[a]);
      changed = true;
    }
  }

  WPresentation wp;
  wp.rd = la.reduction_ptr();
  wp.vars = vars;
  wp.N = N;
  wp.Qc = L.Q;
  Subspace vs(dim, rd.V);
  auto x = g_coords(L.Q, dim, std::nullopt, g);
  auto c = apply_matrix(vs.left_inverse(), x);
  if (apply_matrix(vs.matrix(), c) != x) throw InvalidData("canonical form is not in V");
  for (std::size_t t = 0; t < rd.V.size(); ++t) {
    std::string name = "w" + std::to_string(t + 1);
    Parity p = flip(g.parity(rd.V[t]));
    auto existing = vars->find(name);
    if (existing && existing->parity != p) throw InvalidData("variable " + name + " exists with another parity");
    Variable v = existing ? *existing : vars->add(name, p);
    if (!existing) vars->set_latex(v.id, "w_{" + std::to_string(t + 1) + "}");
    wp.w.push_back(v);
    wp.expr.push_back(c[t]);
  }

  // Leaders: pivots of the constant coefficients of order-0 linear terms,
  // row reduced generator by generator, preferring variables that occur in
  // the fewest generators.
  std::vector<Variable> cand;
  std::map<std::uint32_t, std::size_t> col;
  std::vector<std::map<std::size_t, Rational>> rows(wp.expr.size());
  for (std::size_t t = 0; t < wp.expr.size(); ++t)
    for (const auto& [m, q] : wp.expr[t].terms()) {
      if (m.size() != 1 || m.factors()[0].exp != 1 || key_order(m.factors()[0].key) != 0) continue;
      Variable v = key_variable(m.factors()[0].key);
      auto [it, fresh] = col.emplace(v.id, cand.size());
      if (fresh) cand.push_back(v);
      rows[t][it->second] = q;
    }
  std::vector<std::size_t> count(cand.size());
  for (std::size_t k = 0; k < cand.size(); ++k)
    for (const auto& e : wp.expr) count[k] += mentions(e, cand[k].id);
  std::vector<std::size_t> pivots;
  std::vector<std::map<std::size_t, Rational>> reduced;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    auto r = rows[t];
    for (std::size_t s = 0; s < pivots.size(); ++s) {
      auto it = r.find(pivots[s]);
      if (it == r.end()) continue;
      Rational f = it->second / reduced[s].at(pivots[s]);
      for (const auto& [k, v] : reduced[s]) {
        r[k] -= f * v;
        if (r[k] == 0) r.erase(k);
      }
    }
    std::optional<std::size_t> best;
    for (const auto& [k, v] : r)
      if (!best || count[k] < count[*best]) best = k;
    if (!best) throw InvalidData("w" + std::to_string(t + 1) + " has no independent linear leading variable");
    pivots.push_back(*best);
    reduced.push_back(r);
  }
  Matrix a(pivots.size(), pivots.size());
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t s = 0; s < pivots.size(); ++s)
      if (auto it = rows[t].find(pivots[s]); it != rows[t].end()) a(t, s) = it->second;
  for (auto k : pivots) wp.leader.push_back(cand[k]);
  wp.leader_matrix = a;
  return wp;
}

RewriteResult rewrite_in_w(const SPoly& p, const WPresentation& wp) {
  // leaders = A^{-1} (w - rest), A the leader coefficient matrix
  const std::size_t r = wp.w.size();
  Matrix ainv = *inverse(wp.leader_matrix);
  std::vector<SPoly> rhs(r);
  for (std::size_t t = 0; t < r; ++t) {
    SPoly rest = wp.expr[t];
    for (std::size_t s = 0; s < r; ++s)
      if (wp.leader_matrix(t, s) != 0) rest -= SPoly::var(wp.leader[s]) * wp.leader_matrix(t, s);
    rhs[t] = SPoly::var(wp.w[t]) - rest;
  }
  std::unordered_map<std::uint32_t, SPoly> map;
  auto sol = apply_matrix(ainv, rhs);
  for (std::size_t s = 0; s < r; ++s) map.emplace(wp.leader[s].id, sol[s]);
  auto has_leader = [&](const SPoly& q) {
    for (auto id : q.variables())
      if (map.count(id)) return true;
    return false;
  };
  SPoly q = p;
  for (std::size_t it = 0; has_leader(q); ++it) {
    if (it > 4 * wp.w.size() + 8) throw InvalidData("leader substitution does not terminate");
    q = q.substitute(map);
  }
  std::set<std::uint32_t> wid;
  for (const auto& v : wp.w) wid.insert(v.id);
  std::vector<SPoly::Term> good, bad;
  for (const auto& term : q.terms()) {
    bool only_w = std::all_of(term.first.factors().begin(), term.first.factors().end(),
                              [&](const Factor& f) { return wid.count(key_var(f.key)) > 0; });
    (only_w ? good : bad).push_back(term);
  }
  return {SPoly::from_terms(good), SPoly::from_terms(bad)};
}

SPoly to_w(const SPoly& p, const WPresentation& wp) {
  auto r = rewrite_in_w(p, wp);
  if (!r.ok()) throw InvalidData("not expressible in w: residual " + format(r.residual, *wp.vars));
  return r.value;
}

std::vector<InvarianceFailure> check_gauge_invariance(const SPoly& p, const WPresentation& wp, const BracketSpec& spec1) {
  const ReductionData& rd = *wp.rd;
  const LieSuperAlgebra& g = rd.g();
  std::vector<InvarianceFailure> out;
  for (const auto& x : rd.n.basis()) {
    SPoly nbar;
    for (std::size_t a = 0; a < g.dim(); ++a)
      if (x[a] != 0) nbar += SPoly::var(affine_var(g, a)) * x[a];
    ChiPoly r = project(rd, master_bracket(spec1, nbar, p));
    if (!r.is_zero()) out.push_back({g.format(x), r});
  }
  return out;
}

ChiPoly reduced_bracket(const BracketSpec& spec, const WPresentation& wp, const SPoly& a, const SPoly& b) {
  ChiPoly r = project(*wp.rd, master_bracket(spec, wp.expand(a), wp.expand(b)));
  return map_coeffs(r, [&](const SPoly& c) { return to_w(c, wp); });
}

BracketSpec reduced_spec(const BracketSpec& spec, const WPresentation& wp) {
  std::map<BracketSpec::Key, ChiPoly> entries;
  for (std::size_t i = 0; i < wp.w.size(); ++i)
    for (std::size_t j = i; j < wp.w.size(); ++j) {
      ChiPoly e = reduced_bracket(spec, wp, SPoly::var(wp.w[i]), SPoly::var(wp.w[j]));
      if (!e.is_zero()) entries.emplace(BracketSpec::Key{i, j}, e);
    }
  return BracketSpec(wp.vars, wp.w, entries);
}

}  // namespace spva
