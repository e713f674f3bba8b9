#include "spva/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "spva/errors.hpp"

namespace spva {

namespace {

// Row vector r with r . x = (x|y).
Vec form_row_right(const LieSuperAlgebra& g, const Vec& y) {
  Vec r(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b)
      if (y[b] != 0 && g.form(a, b) != 0) r[a] += g.form(a, b) * y[b];
  return r;
}

std::optional<int> degree_of(const LieSuperAlgebra& g, const Vec& x) {
  try {
    return g.degree(x);
  } catch (const InvalidData&) {
    return std::nullopt;
  }
}

std::optional<Parity> parity_of_vec(const LieSuperAlgebra& g, const Vec& x) {
  try {
    return g.parity(x);
  } catch (const InvalidData&) {
    return std::nullopt;
  }
}

void check_size(const LieSuperAlgebra& g, const Vec& v, const char* what) {
  if (v.size() != g.dim()) throw InvalidData(std::string(what) + " has wrong dimension");
}

}  // namespace

Rational ReductionData::m_constant(std::size_t a) const {
  Rational c;
  const Vec& co = split.at(a);
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const Rational& beta = co[bminus.size() + k];
    if (beta != 0) c += beta * g().form(f, m.basis()[k]);
  }
  return c;
}

ReductionData make_reduction(LieSuperAlgebraPtr gp, const ReductionInput& in) {
  const LieSuperAlgebra& g = *gp;
  const std::size_t dim = g.dim();
  ReductionData rd;
  rd.algebra = gp;
  check_size(g, in.f, "f");
  check_size(g, in.s, "s");
  for (const auto& v : in.n) check_size(g, v, "n vector");
  for (const auto& v : in.m) check_size(g, v, "m vector");
  rd.n = Subspace(dim, in.n);
  rd.m = Subspace(dim, in.m);
  rd.f = in.f;
  rd.s = in.s;
  if (is_zero(rd.f)) throw InvalidData("f is zero");
  rd.i = -degree_of(g, rd.f).value_or(0);
  rd.j = is_zero(rd.s) ? 0 : degree_of(g, rd.s).value_or(0);

  // b_- from basis elements complementing m.
  if (in.bminus) {
    rd.bminus = *in.bminus;
    for (auto a : rd.bminus)
      if (a >= dim) throw InvalidData("b_- index out of range");
  } else {
    std::vector<Vec> span = rd.m.basis();
    std::size_t r = rank(Matrix::from_columns(span, dim));
    for (std::size_t a = 0; a < dim && r < dim; ++a) {
      span.push_back(g.unit(a));
      std::size_t rk = rank(Matrix::from_columns(span, dim));
      if (rk > r) {
        rd.bminus.push_back(a);
        r = rk;
      } else {
        span.pop_back();
      }
    }
  }
  std::vector<Vec> full;
  for (auto a : rd.bminus) full.push_back(g.unit(a));
  for (const auto& v : rd.m.basis()) full.push_back(v);
  auto full_inv = full.size() == dim ? inverse(Matrix::from_columns(full, dim)) : std::nullopt;
  if (!full_inv) throw InvalidData("b_- basis elements do not complement m");
  rd.split.resize(dim);
  for (std::size_t a = 0; a < dim; ++a) rd.split[a] = full_inv->column(a);

  // Dual basis q^t in m-perp with (q^t|q_t') = delta.
  Matrix sys(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    Vec row = r < rd.bminus.size() ? form_row_right(g, g.unit(rd.bminus[r])) : form_row_right(g, rd.m.basis()[r - rd.bminus.size()]);
    for (std::size_t c = 0; c < dim; ++c) sys(r, c) = row[c];
  }
  auto sys_inv = inverse(sys);
  if (!sys_inv) throw InvalidData("form is degenerate; no dual basis");
  for (std::size_t t = 0; t < rd.bminus.size(); ++t) rd.bdual.push_back(sys_inv->column(t));

  Subspace fn(dim, [&] {
    std::vector<Vec> v;
    for (const auto& x : rd.n.basis()) v.push_back(g.bracket(rd.f, x));
    return v;
  }());
  rd.fn = fn.basis();

  if (in.V) {
    for (const auto& v : *in.V) check_size(g, v, "V vector");
    rd.V = *in.V;
  } else {
    std::vector<Vec> cand;
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) < g.degree(b); });
    Subspace b(dim, rd.bdual);
    for (auto a : order)
      if (b.contains(g.unit(a))) cand.push_back(g.unit(a));
    for (const auto& v : rd.bdual) cand.push_back(v);
    std::vector<Vec> span = rd.fn;
    std::size_t r = rank(Matrix::from_columns(span, dim));
    for (const auto& v : cand) {
      if (r >= rd.bdual.size()) break;
      span.push_back(v);
      std::size_t rk = rank(Matrix::from_columns(span, dim));
      if (rk > r) {
        rd.V.push_back(v);
        r = rk;
      } else {
        span.pop_back();
      }
    }
  }
  return rd;
}

ValidationReport validate_reduction(const ReductionData& rd) {
  const LieSuperAlgebra& g = rd.g();
  const std::size_t dim = g.dim();
  ValidationReport rep;
  auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok, ok ? "" : detail});
  };

  auto pf = parity_of_vec(g, rd.f);
  auto df = degree_of(g, rd.f);
  add("f odd and homogeneous of negative degree", pf == Parity::Odd && df && *df < 0, "f = " + g.format(rd.f));
  auto ps = parity_of_vec(g, rd.s);
  auto ds = degree_of(g, rd.s);
  add("s odd and homogeneous of positive degree", ps == Parity::Odd && ds && *ds > 0, "s = " + g.format(rd.s));

  {
    bool ok = true;
    std::string w;
    for (const auto& x : rd.n.basis()) {
      auto d = degree_of(g, x);
      if (!d || *d <= 0 || !parity_of_vec(g, x)) {
        ok = false;
        w = g.format(x);
        break;
      }
    }
    add("n homogeneous inside g_{>0}", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& x : rd.n.basis())
      for (const auto& y : rd.n.basis())
        if (ok && !rd.n.contains(g.bracket(x, y))) {
          ok = false;
          w = "[" + g.format(x) + ", " + g.format(y) + "]";
        }
    add("n subalgebra", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& x : rd.m.basis()) {
      if (!rd.n.contains(x) || !degree_of(g, x) || !parity_of_vec(g, x)) {
        ok = false;
        w = g.format(x);
      }
      for (const auto& y : rd.n.basis())
        if (ok && !rd.m.contains(g.bracket(y, x))) {
          ok = false;
          w = "[" + g.format(y) + ", " + g.format(x) + "]";
        }
    }
    add("m homogeneous n-submodule of n", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t t = 0; t < rd.bminus.size(); ++t) {
      const Vec& up = rd.bdual[t];
      for (std::size_t u = 0; u < rd.bminus.size(); ++u) {
        Vec low = g.unit(rd.bminus[u]);
        Rational a = g.form(up, low);
        Rational b = g.form(low, up);
        bool odd = g.parity(rd.bminus[u]) == Parity::Odd;
        if (a != (t == u ? 1 : 0) || b != (odd ? Rational(-a) : a)) {
          ok = false;
          w = "(q^" + std::to_string(t) + "|q_" + std::to_string(u) + ")";
        }
      }
      for (const auto& x : rd.m.basis())
        if (ok && g.form(up, x) != 0) {
          ok = false;
          w = "q^" + std::to_string(t) + " not orthogonal to m";
        }
    }
    add("dual bases of b and b_-", ok, w);
  }
  {
    std::string w;
    bool ok = true;
    for (std::size_t a = 0; a < dim && ok; ++a) {
      if (g.degree(a) >= rd.i && rd.i > 0 && !rd.m.contains(g.unit(a))) {
        ok = false;
        w = g.basis(a).name;
      }
    }
    add("A-1 g_{>=i} inside m", ok, w);
  }
  Subspace b(dim, rd.bdual);
  {
    bool ok = true;
    std::string w;
    for (const auto& x : rd.n.basis()) {
      Vec y = g.bracket(rd.f, x);
      if (ok && !b.contains(y)) {
        ok = false;
        w = "[f, " + g.format(x) + "] = " + g.format(y);
      }
    }
    add("A-2 [f,n] inside b", ok, w);
  }
  {
    std::vector<Vec> cols;
    for (const auto& x : rd.n.basis()) cols.push_back(g.bracket(rd.f, x));
    auto ker = nullspace(Matrix::from_columns(cols, dim));
    std::string w;
    if (!ker.empty()) {
      Vec x(dim);
      for (std::size_t k = 0; k < ker[0].size(); ++k) x = x + ker[0][k] * rd.n.basis()[k];
      w = "[f, " + g.format(x) + "] = 0";
    }
    add("A-3 ad f injective on n", ker.empty(), w);
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& x : rd.n.basis()) {
      Vec y = g.bracket(rd.s, x);
      if (ok && !is_zero(y)) {
        ok = false;
        w = "[s, " + g.format(x) + "] = " + g.format(y);
      }
    }
    add("A-4 [s,n] = 0", ok, w);
  }
  {
    std::vector<Vec> all = rd.V;
    all.insert(all.end(), rd.fn.begin(), rd.fn.end());
    bool ok = rank(Matrix::from_columns(all, dim)) == all.size() && all.size() == b.dim();
    std::string w = "dim V + dim [f,n] = " + std::to_string(all.size()) + ", dim b = " + std::to_string(b.dim());
    for (const auto& v : rd.V) {
      if (!b.contains(v) || !degree_of(g, v) || !parity_of_vec(g, v)) {
        ok = false;
        w = "V element " + g.format(v) + " is not a homogeneous element of b";
      }
    }
    add("V complements [f,n] in b", ok, w);
  }
  return rep;
}

VariableSetPtr affine_variables(const LieSuperAlgebra& g) {
  auto vars = std::make_shared<VariableSet>();
  for (std::size_t a = 0; a < g.dim(); ++a) {
    Variable v = vars->add(g.basis(a).name + "bar", flip(g.parity(a)));
    vars->set_latex(v.id, "\\bar{" + g.basis(a).name + "}");
  }
  return vars;
}

BracketSpec affine_spec(const LieSuperAlgebra& g, int which, const VariableSetPtr& vars, const Vec& s) {
  if (which != 1 && which != 2) throw InvalidData("affine structure must be 1 or 2");
  if (vars->size() < g.dim()) throw InvalidData("variable set does not cover the algebra");
  std::vector<Variable> gens;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    Variable v = vars->at(static_cast<std::uint32_t>(a));
    if (vars->name(v.id) != g.basis(a).name + "bar" || v.parity != flip(g.parity(a)))
      throw InvalidData("variable " + std::to_string(a) + " does not match the algebra");
    gens.push_back(v);
  }
  Vec sv = s;
  if (which == 2) {
    if (sv.size() != g.dim()) throw InvalidData("s has wrong dimension");
    if (!is_zero(sv) && g.parity(sv) != Parity::Odd) throw InvalidData("s must be odd");
  }
  std::map<BracketSpec::Key, ChiPoly> entries;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b) {
      ChiPoly e;
      if (which == 1) {
        SPoly c0;
        for (const auto& [k, v] : g.bracket(a, b)) c0 += SPoly::var(gens[k]) * v;
        e = ChiPoly(c0);
        if (g.form(a, b) != 0) e.add_term(1, SPoly(g.form(a, b)));
        if (g.parity(a) == Parity::Odd) e = -e;
      } else {
        Rational c = g.form(sv, g.dense(g.bracket(a, b)));
        if (g.parity(a) == Parity::Even) c = -c;
        e = ChiPoly(SPoly(c));
      }
      if (!e.is_zero()) entries[{a, b}] = e;
    }
  return BracketSpec(vars, gens, entries);
}

}  // namespace spva
