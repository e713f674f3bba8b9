#include "spva/builtin.hpp"

#include <regex>

#include <fmt/format.h>

#include "spva/errors.hpp"

namespace spva {

namespace {

Matrix unit_matrix(std::size_t size, std::size_t r, std::size_t c, const Rational& v = 1) {
  Matrix m(size, size);
  m(r, c) = v;
  return m;
}

Matrix add(Matrix a, const Matrix& b, const Rational& q = 1) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += q * b(i, j);
  return a;
}

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

std::pair<Parity, int> homogeneous_type(const Matrix& m, const MatrixRealization& r, const std::string& name) {
  std::optional<Parity> p;
  std::optional<int> d;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Parity pe = r.row_parity[i] + r.row_parity[j];
      int de = r.row_degree[j] - r.row_degree[i];
      if ((p && *p != pe) || (d && *d != de)) throw InvalidData("matrix for " + name + " is not homogeneous");
      p = pe;
      d = de;
    }
  if (!p) throw InvalidData("matrix for " + name + " is zero");
  return {*p, *d};
}

long param(const std::map<std::string, std::vector<Rational>>& params, const std::string& key, long dflt) {
  auto it = params.find(key);
  if (it == params.end()) return dflt;
  if (it->second.size() != 1 || it->second[0].get_den() != 1) throw InvalidData("parameter " + key + " must be an integer");
  return it->second[0].get_num().get_si();
}

std::string ename(std::size_t r, std::size_t c) { return fmt::format("E{}_{}", r + 1, c + 1); }

ReductionInput reduction_from_degrees(const LieSuperAlgebra& g, int n_min, int m_min, const Vec& f, const Vec& s) {
  ReductionInput in;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (g.degree(a) >= n_min) in.n.push_back(g.unit(a));
    if (g.degree(a) >= m_min) in.m.push_back(g.unit(a));
  }
  in.f = f;
  in.s = s;
  return in;
}

// Coordinates of a matrix in the realized basis; the matrix must lie in the span.
Vec coordinates(const Subspace& span, const MatrixRealization& r, const Matrix& m) {
  auto c = span.coordinates(flatten(m));
  if (!c) throw InvalidData("matrix outside the realized algebra");
  return Vec(c->begin(), c->begin() + static_cast<long>(r.basis.size()));
}

Builtin osp22() {
  // sl(2|1) with row parities (0,1,0); osp(2|2) ~ sl(2|1).
  MatrixRealization r;
  r.row_parity = {Parity::Even, Parity::Odd, Parity::Even};
  r.row_degree = {0, 0, 1};
  r.form_scale = -1;
  auto E = [](std::size_t i, std::size_t j, const Rational& v = 1) { return unit_matrix(3, i - 1, j - 1, v); };
  r.basis = {
      {"e1", E(1, 2, 2)},
      {"e2", E(2, 3, -2)},
      {"e3", E(1, 3, -4)},
      {"f1", E(2, 1)},
      {"f2", E(3, 2)},
      {"f3", E(3, 1)},
      {"h1", add(E(1, 1, 2), E(2, 2, 2))},
      {"h2", add(E(2, 2, -2), E(3, 3, -2))},
  };
  Builtin b{realize("osp(2|2)", r), {}, r};
  const auto& g = b.algebra;
  b.reduction.n = {g.unit(g.index("e2")), g.unit(g.index("e3"))};
  b.reduction.m = b.reduction.n;
  b.reduction.f = g.unit(g.index("f2"));
  b.reduction.s = g.unit(g.index("e2"));
  b.reduction.V = std::vector<Vec>{g.unit(g.index("f1")), g.unit(g.index("h1")), g.unit(g.index("e2")), g.unit(g.index("e3"))};
  return b;
}

// Even rows first, then odd rows; Cartan part from consecutive differences.
void add_gl_basis(MatrixRealization& r, std::size_t size, std::size_t cartan) {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (i != j) r.basis.emplace_back(ename(i, j), unit_matrix(size, i, j));
  for (std::size_t k = 0; k < cartan; ++k) {
    Rational a = r.row_parity[k] == Parity::Odd ? -1 : 1;
    Rational c = r.row_parity[k + 1] == Parity::Odd ? 1 : -1;
    r.basis.emplace_back(fmt::format("H{}", k + 1), add(unit_matrix(size, k, k, a), unit_matrix(size, k + 1, k + 1, c)));
  }
}

Builtin sl_mn(long m, long n) {
  if (n < 1 || m <= n) throw InvalidData("sl(m|n) needs m > n >= 1");
  const std::size_t size = static_cast<std::size_t>(m + n);
  MatrixRealization r;
  // blocks of sizes n, m-n, n with degrees 0, 1, 2; the last block is odd
  for (long k = 0; k < m + n; ++k) {
    r.row_parity.push_back(k < m ? Parity::Even : Parity::Odd);
    r.row_degree.push_back(k < n ? 0 : (k < m ? 1 : 2));
  }
  add_gl_basis(r, size, size - 1);
  Builtin b{realize(fmt::format("sl({}|{})", m, n), r), {}, r};
  Matrix f(size, size);
  Matrix s(size, size);
  for (long p = 0; p < n; ++p) {
    f(static_cast<std::size_t>(m + p), static_cast<std::size_t>(p)) = 1;
    s(static_cast<std::size_t>(p), static_cast<std::size_t>(m + p)) = 1;
  }
  Subspace span(size * size, [&] {
    std::vector<Vec> v;
    for (const auto& [nm, x] : r.basis) v.push_back(flatten(x));
    return v;
  }());
  b.reduction = reduction_from_degrees(b.algebra, 1, 2, coordinates(span, r, f), coordinates(span, r, s));
  return b;
}

Builtin osp_2n2n(long n) {
  if (n < 1) throw InvalidData("osp(2n|2n) needs n >= 1");
  const std::size_t N = static_cast<std::size_t>(n);
  const std::size_t size = 4 * N;
  MatrixRealization r;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t blk = k / N;
    r.row_parity.push_back(blk < 2 ? Parity::Even : Parity::Odd);
    r.row_degree.push_back(blk % 2 == 0 ? 0 : 1);
  }
  auto E = [&](std::size_t bi, std::size_t bj, std::size_t p, std::size_t q) { return unit_matrix(size, bi * N + p, bj * N + q); };
  auto nm = [](const char* blk, std::size_t p, std::size_t q) { return fmt::format("{}_{}{}", blk, p + 1, q + 1); };
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) r.basis.emplace_back(nm("A11", p, q), add(E(0, 0, p, q), E(1, 1, q, p), -1));
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p; q < N; ++q) {
      r.basis.emplace_back(nm("A12", p, q), p == q ? E(0, 1, p, p) : add(E(0, 1, p, q), E(0, 1, q, p)));
      r.basis.emplace_back(nm("A21", p, q), p == q ? E(1, 0, p, p) : add(E(1, 0, p, q), E(1, 0, q, p)));
    }
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) r.basis.emplace_back(nm("A33", p, q), add(E(2, 2, p, q), E(3, 3, q, p), -1));
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q) {
      r.basis.emplace_back(nm("A34", p, q), add(E(2, 3, p, q), E(2, 3, q, p), -1));
      r.basis.emplace_back(nm("A43", p, q), add(E(3, 2, p, q), E(3, 2, q, p), -1));
    }
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      r.basis.emplace_back(nm("A31", p, q), add(E(2, 0, p, q), E(1, 3, q, p), -1));
      r.basis.emplace_back(nm("A32", p, q), add(E(2, 1, p, q), E(0, 3, q, p)));
      r.basis.emplace_back(nm("A41", p, q), add(E(3, 0, p, q), E(1, 2, q, p), -1));
      r.basis.emplace_back(nm("A42", p, q), add(E(3, 1, p, q), E(0, 2, q, p)));
    }
  Builtin b{realize(fmt::format("osp({}|{})", 2 * n, 2 * n), r), {}, r};
  const auto& g = b.algebra;
  Vec f(g.dim());
  Vec s(g.dim());
  for (std::size_t p = 0; p < N; ++p) {
    f[g.index(nm("A41", p, p))] = 1;
    s[g.index(nm("A32", p, p))] = 1;
  }
  b.reduction = reduction_from_degrees(g, 1, 1, f, s);
  return b;
}

Builtin sl_nn_mod_identity(long n, const std::vector<Rational>& A) {
  if (n < 1) throw InvalidData("sl(n|n)/I needs n >= 1");
  const std::size_t N = static_cast<std::size_t>(n);
  const std::size_t size = 2 * N;
  if (A.size() != N) throw InvalidData("A must have n diagonal entries");
  MatrixRealization r;
  for (std::size_t k = 0; k < size; ++k) {
    r.row_parity.push_back(k < N ? Parity::Even : Parity::Odd);
    r.row_degree.push_back(k < N ? 0 : 1);
  }
  add_gl_basis(r, size, size - 2);
  r.ideal.push_back(Matrix::identity(size));
  Builtin b{realize(fmt::format("sl({}|{})/I", n, n), r), {}, r};
  Matrix f(size, size);
  Matrix s(size, size);
  for (std::size_t p = 0; p < N; ++p) {
    f(N + p, p) = 1;
    s(p, N + p) = A[p];
  }
  std::vector<Vec> spanning;
  for (const auto& [nm, x] : r.basis) spanning.push_back(flatten(x));
  spanning.push_back(flatten(Matrix::identity(size)));
  Subspace span(size * size, spanning);
  b.reduction = reduction_from_degrees(b.algebra, 1, 1, coordinates(span, r, f), coordinates(span, r, s));
  return b;
}

}  // namespace

Rational supertrace(const Matrix& m, const std::vector<Parity>& row_parity) {
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += row_parity[i] == Parity::Odd ? Rational(-m(i, i)) : m(i, i);
  return t;
}

Matrix supercommutator(const Matrix& x, Parity px, const Matrix& y, Parity py) {
  Rational sign = (px == Parity::Odd && py == Parity::Odd) ? 1 : -1;
  return add(x * y, y * x, sign);
}

LieSuperAlgebra realize(const std::string& name, const MatrixRealization& r) {
  const std::size_t size = r.row_parity.size();
  if (r.row_degree.size() != size) throw InvalidData("row degrees and parities differ in length");
  std::vector<BasisElement> basis;
  std::vector<Vec> spanning;
  for (const auto& [nm, m] : r.basis) {
    if (m.rows() != size || m.cols() != size) throw InvalidData("matrix for " + nm + " has wrong size");
    auto [p, d] = homogeneous_type(m, r, nm);
    basis.push_back({nm, p, d});
    spanning.push_back(flatten(m));
  }
  for (const auto& m : r.ideal) spanning.push_back(flatten(m));
  Subspace span(size * size, spanning);
  if (span.dim() != spanning.size()) throw InvalidData("realization matrices are linearly dependent");
  LieSuperAlgebra g(name, basis);
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b) {
      Matrix c = supercommutator(r.basis[a].second, basis[a].parity, r.basis[b].second, basis[b].parity);
      auto co = span.coordinates(flatten(c));
      if (!co) throw InvalidData("[" + basis[a].name + ", " + basis[b].name + "] leaves the span");
      g.set_bracket(a, b, Vec(co->begin(), co->begin() + static_cast<long>(g.dim())));
      Rational f = r.form_scale * supertrace(r.basis[a].second * r.basis[b].second, r.row_parity);
      if (f != 0) g.set_form(a, b, f);
    }
  return g;
}

std::vector<std::string> builtin_names() { return {"osp(2|2)", "sl(m|n)", "osp(2n|2n)", "sl(n|n)/I"}; }

Builtin builtin(const std::string& name, const std::map<std::string, std::vector<Rational>>& params) {
  if (name == "osp(2|2)" || name == "osp22") return osp22();
  if (name == "sl(m|n)" || name == "slmn") return sl_mn(param(params, "m", 2), param(params, "n", 1));
  if (name == "osp(2n|2n)" || name == "osp2n2n") return osp_2n2n(param(params, "n", 1));
  if (name == "sl(n|n)/I" || name == "psl") {
    long n = param(params, "n", 2);
    std::vector<Rational> A;
    if (auto it = params.find("A"); it != params.end()) {
      A = it->second;
    } else {
      for (long k = 1; k <= n; ++k) A.emplace_back(k);
    }
    return sl_nn_mod_identity(n, A);
  }
  // concrete names such as sl(3|1) or osp(4|4)
  std::smatch mt;
  static const std::regex family(R"((sl|osp)\((\d+)\|(\d+)\))");
  if (std::regex_match(name, mt, family)) {
    long a = std::stol(mt[2]), c = std::stol(mt[3]);
    if (mt[1] == "sl" && a != c) return sl_mn(a, c);
    if (mt[1] == "osp" && a == c && a % 2 == 0) return osp_2n2n(a / 2);
  }
  throw InvalidData("unknown builtin algebra '" + name + "'");
}

}  // namespace spva
