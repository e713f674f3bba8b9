#include "spva/lie_superalgebra.hpp"

#include <sstream>
#include <stdexcept>

#include "spva/errors.hpp"

namespace spva {

LieSuperAlgebra::LieSuperAlgebra(std::string name, std::vector<BasisElement> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  for (std::size_t a = 0; a < basis_.size(); ++a)
    if (!index_.emplace(basis_[a].name, a).second) throw InvalidData("duplicate basis element '" + basis_[a].name + "'");
  br_.assign(basis_.size() * basis_.size(), {});
  form_ = Matrix(basis_.size(), basis_.size());
}

std::size_t LieSuperAlgebra::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InvalidData("unknown basis element '" + name + "'");
  return it->second;
}

void LieSuperAlgebra::set_bracket(std::size_t a, std::size_t b, const Vec& value) {
  if (value.size() != dim()) throw std::invalid_argument("bracket value has wrong dimension");
  SparseVec s;
  SparseVec t;
  bool neg = (bit(parity(a)) & bit(parity(b))) == 0;  // [b,a] = (-1)^{p(a)p(b)+1}[a,b]
  for (std::size_t c = 0; c < dim(); ++c) {
    if (value[c] == 0) continue;
    s.emplace_back(c, value[c]);
    t.emplace_back(c, neg ? Rational(-value[c]) : value[c]);
  }
  br_[a * dim() + b] = s;
  if (a != b) br_[b * dim() + a] = t;
}

void LieSuperAlgebra::set_form(std::size_t a, std::size_t b, const Rational& value) {
  form_(a, b) = value;
  form_(b, a) = (bit(parity(a)) & bit(parity(b))) ? Rational(-value) : value;
}

Vec LieSuperAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (y[b] == 0) continue;
      Rational c = x[a] * y[b];
      for (const auto& [k, v] : bracket(a, b)) r[k] += c * v;
    }
  }
  return r;
}

Rational LieSuperAlgebra::form(const Vec& x, const Vec& y) const {
  Rational r;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b)
      if (y[b] != 0 && form_(a, b) != 0) r += x[a] * y[b] * form_(a, b);
  }
  return r;
}

Vec LieSuperAlgebra::unit(std::size_t a) const {
  Vec v(dim());
  v.at(a) = 1;
  return v;
}

Vec LieSuperAlgebra::dense(const SparseVec& s) const {
  Vec v(dim());
  for (const auto& [k, c] : s) v[k] = c;
  return v;
}

Parity LieSuperAlgebra::parity(const Vec& x) const {
  std::optional<Parity> p;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    if (p && *p != parity(a)) throw InvalidData("element is not homogeneous in parity: " + format(x));
    p = parity(a);
  }
  if (!p) throw InvalidData("zero element has no parity");
  return *p;
}

int LieSuperAlgebra::degree(const Vec& x) const {
  std::optional<int> d;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    if (d && *d != degree(a)) throw InvalidData("element is not homogeneous in degree: " + format(x));
    d = degree(a);
  }
  if (!d) throw InvalidData("zero element has no degree");
  return *d;
}

std::string LieSuperAlgebra::format(const Vec& x) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    Rational c = x[a];
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Rational ac = abs(c);
    if (ac != 1) out << to_string(ac) << "*";
    out << basis_[a].name;
  }
  return first ? "0" : out.str();
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(const LieSuperAlgebra& g) {
  ValidationReport rep;
  const std::size_t n = g.dim();
  auto name = [&](std::size_t a) { return g.basis(a).name; };
  auto fail_once = [](CheckResult& c, const std::string& d) {
    if (c.passed) c.detail = d;
    c.passed = false;
  };

  CheckResult skew{"bracket skew-symmetric", true, ""};
  CheckResult grading{"bracket respects grading and parity", true, ""};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec ab = g.dense(g.bracket(a, b));
      Vec ba = g.dense(g.bracket(b, a));
      bool neg = (bit(g.parity(a)) & bit(g.parity(b))) == 0;
      if ((neg ? ab + ba : ab - ba) != Vec(n)) fail_once(skew, "[" + name(a) + "," + name(b) + "]");
      for (const auto& [c, v] : g.bracket(a, b)) {
        if (g.degree(c) != g.degree(a) + g.degree(b) || g.parity(c) != g.parity(a) + g.parity(b))
          fail_once(grading, "[" + name(a) + "," + name(b) + "] has component " + name(c));
      }
    }

  CheckResult jacobi{"Jacobi identity", true, ""};
  for (std::size_t a = 0; a < n && jacobi.passed; ++a)
    for (std::size_t b = 0; b < n && jacobi.passed; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vec ea = g.unit(a);
        Vec eb = g.unit(b);
        Vec ec = g.unit(c);
        Vec lhs = g.bracket(ea, g.dense(g.bracket(b, c)));
        Vec r1 = g.bracket(g.dense(g.bracket(a, b)), ec);
        Vec r2 = g.bracket(eb, g.dense(g.bracket(a, c)));
        if (bit(g.parity(a)) & bit(g.parity(b))) r2 = Rational(-1) * r2;
        Vec res = lhs - r1 - r2;
        if (!is_zero(res)) {
          fail_once(jacobi, "(" + name(a) + "," + name(b) + "," + name(c) + ") residual " + g.format(res));
          break;
        }
      }

  CheckResult sym{"form supersymmetric", true, ""};
  CheckResult even{"form even", true, ""};
  CheckResult fgrad{"form pairs degree k with -k", true, ""};
  CheckResult inv{"form invariant", true, ""};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& ab = g.form(a, b);
      const Rational& ba = g.form(b, a);
      bool neg = bit(g.parity(a)) & bit(g.parity(b));
      if (ab != (neg ? Rational(-ba) : ba)) fail_once(sym, "(" + name(a) + "|" + name(b) + ")");
      if (ab != 0 && g.parity(a) != g.parity(b)) fail_once(even, "(" + name(a) + "|" + name(b) + ")");
      if (ab != 0 && g.degree(a) + g.degree(b) != 0) fail_once(fgrad, "(" + name(a) + "|" + name(b) + ")");
      for (std::size_t c = 0; c < n && inv.passed; ++c) {
        Rational l = g.form(g.dense(g.bracket(a, b)), g.unit(c));
        Rational r = g.form(g.unit(a), g.dense(g.bracket(b, c)));
        if (l != r) fail_once(inv, "([" + name(a) + "," + name(b) + "]|" + name(c) + ")");
      }
    }
  CheckResult nondeg{"form nondegenerate", rank(g.form_matrix()) == n, ""};
  if (!nondeg.passed) nondeg.detail = "rank " + std::to_string(rank(g.form_matrix())) + " < " + std::to_string(n);

  rep.checks = {skew, grading, jacobi, sym, even, fgrad, inv, nondeg};
  return rep;
}

}  // namespace spva
