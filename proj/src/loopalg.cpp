#include "spva/loopalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spva/errors.hpp"

namespace spva {

namespace {

const SPoly kZero;

}  // namespace

const SPoly& LoopElem::at(int k, std::size_t a) const {
  auto it = t_.find({k, a});
  return it == t_.end() ? kZero : it->second;
}

void LoopElem::add(int k, std::size_t a, const SPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace({k, a}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LoopElem LoopElem::single(int k, std::size_t a, const SPoly& c) {
  LoopElem x;
  x.add(k, a, c);
  return x;
}

LoopElem LoopElem::constant(int k, const Vec& v, const SPoly& c) {
  LoopElem x;
  for (std::size_t a = 0; a < v.size(); ++a)
    if (v[a] != 0) x.add(k, a, c * v[a]);
  return x;
}

LoopElem LoopElem::operator-() const {
  LoopElem r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

LoopElem& LoopElem::operator+=(const LoopElem& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

LoopElem& LoopElem::operator-=(const LoopElem& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
  return *this;
}

LoopElem& LoopElem::operator*=(const Rational& q) {
  if (q == 0) {
    t_.clear();
  } else {
    for (auto& [k, c] : t_) c *= q;
  }
  return *this;
}

LoopElem LoopElem::homogeneous_part(unsigned deg) const {
  LoopElem r;
  for (const auto& [k, c] : t_) r.add(k.first, k.second, c.homogeneous_part(deg));
  return r;
}

LoopElem LoopElem::z_part(int k) const {
  LoopElem r;
  for (const auto& [key, c] : t_)
    if (key.first == k) r.t_.emplace(key, c);
  return r;
}

LoopElem LoopElem::substitute(const std::unordered_map<std::uint32_t, SPoly>& map) const {
  LoopElem r;
  for (const auto& [k, c] : t_) r.add(k.first, k.second, c.substitute(map));
  return r;
}

std::pair<int, int> LoopElem::z_range() const {
  if (t_.empty()) throw InvalidData("z_range of zero element");
  return {t_.begin()->first.first, t_.rbegin()->first.first};
}

std::vector<SPoly> apply_matrix(const Matrix& m, const std::vector<SPoly>& v) {
  std::vector<SPoly> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && !v[j].is_zero()) r[i] += v[j] * m(i, j);
  return r;
}

LoopAlgebra::LoopAlgebra(std::shared_ptr<const ReductionData> rd, int zmin, int zmax)
    : rd_(std::move(rd)), zmin_(zmin), zmax_(zmax) {
  if (zmin_ > zmax_) throw InvalidData("empty z-window");
  if (period() <= 0) throw InvalidData("loop grading needs i + j > 0");
  LoopElem l = lambda();
  lambda_sq_ = bracket(l, l);
  lambda_sq_ *= Rational(1, 2);
}

int LoopAlgebra::grade(const LoopElem::Key& k) const {
  return g().degree(k.second) + k.first * rd_->z_degree();
}

Parity LoopAlgebra::parity(std::size_t a, const SPoly& u) const {
  return g().parity(a) + u.parity_or_even();
}

void LoopAlgebra::check_window(const LoopElem& x) const {
  if (x.is_zero()) return;
  auto [lo, hi] = x.z_range();
  if (lo < zmin_ || hi > zmax_)
    throw WindowOverflow("z-power " + std::to_string(lo < zmin_ ? lo : hi) + " outside window [" +
                         std::to_string(zmin_) + ", " + std::to_string(zmax_) + "]");
}

LoopElem LoopAlgebra::bracket(const LoopElem& x, const LoopElem& y, std::optional<int> max_grade) const {
  LoopElem r = bracket_impl(x, y, max_grade);
  check_window(r);
  return r;
}

LoopElem LoopAlgebra::bracket_impl(const LoopElem& x, const LoopElem& y, std::optional<int> max_grade) const {
  LoopElem r;
  const LieSuperAlgebra& G = g();
  for (const auto& [kx, u] : x.terms()) {
    auto [u0, u1] = u.split_parity();
    for (const auto& [ky, v] : y.terms()) {
      const int k = kx.first + ky.first;
      const std::size_t b = ky.second;
      if (max_grade && G.degree(kx.second) + G.degree(b) + k * rd_->z_degree() > *max_grade) continue;
      const SparseVec& ab = G.bracket(kx.second, b);
      if (ab.empty()) continue;
      SPoly uv = (G.parity(b) == Parity::Odd) ? (u0 - u1) * v : u * v;
      if (uv.is_zero()) continue;
      for (const auto& [c, q] : ab) r.add(k, c, uv * q);
    }
  }
  return r;
}

LoopElem LoopAlgebra::D(const LoopElem& x) const {
  LoopElem r;
  for (const auto& [k, u] : x.terms()) {
    SPoly d = u.D();
    if (g().parity(k.second) == Parity::Odd) d = -d;
    r.add(k.first, k.second, d);
  }
  return r;
}

SPoly LoopAlgebra::pairing(const LoopElem& x, const LoopElem& y) const {
  SPoly r;
  const LieSuperAlgebra& G = g();
  for (const auto& [kx, u] : x.terms()) {
    auto [u0, u1] = u.split_parity();
    for (const auto& [ky, v] : y.terms()) {
      if (kx.first + ky.first != 0) continue;
      const Rational& q = G.form(kx.second, ky.second);
      if (q == 0) continue;
      SPoly uv = (G.parity(ky.second) == Parity::Odd) ? (u0 - u1) * v : u * v;
      r += uv * q;
    }
  }
  return r;
}

LoopElem LoopAlgebra::grade_part(const LoopElem& x, int gr) const {
  LoopElem r;
  for (const auto& [k, u] : x.terms())
    if (grade(k) == gr) r.add(k.first, k.second, u);
  return r;
}

LoopElem LoopAlgebra::truncate(const LoopElem& x, int max_grade) const {
  LoopElem r;
  for (const auto& [k, u] : x.terms())
    if (grade(k) <= max_grade) r.add(k.first, k.second, u);
  return r;
}

std::pair<int, int> LoopAlgebra::grade_range(const LoopElem& x) const {
  if (x.is_zero()) throw InvalidData("grade_range of zero element");
  int lo = grade(x.terms().begin()->first), hi = lo;
  for (const auto& [k, u] : x.terms()) {
    lo = std::min(lo, grade(k));
    hi = std::max(hi, grade(k));
  }
  return {lo, hi};
}

LoopElem LoopAlgebra::lambda() const {
  return LoopElem::constant(0, rd_->f) + LoopElem::constant(1, rd_->s);
}

LoopElem LoopAlgebra::lambda_squared() const { return lambda_sq_; }

std::vector<LoopElem::Key> LoopAlgebra::keys_of_grade(int gr) const {
  std::vector<LoopElem::Key> keys;
  const int zd = rd_->z_degree();
  for (std::size_t a = 0; a < g().dim(); ++a) {
    int diff = gr - g().degree(a);
    if (diff % zd == 0) keys.emplace_back(diff / zd, a);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Columns: basis of grade from_grade; rows: basis of grade from_grade - 2i.
Matrix LoopAlgebra::ad_lambda_sq_matrix(int from_grade) const {
  auto src = keys_of_grade(from_grade);
  auto dst = keys_of_grade(from_grade - 2 * rd_->i);
  std::map<LoopElem::Key, std::size_t> at;
  for (std::size_t r = 0; r < dst.size(); ++r) at[dst[r]] = r;
  Matrix m(dst.size(), src.size());
  const LieSuperAlgebra& G = g();
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (const auto& [kl, u] : lambda_sq_.terms()) {
      Rational q = u.constant_term();
      for (const auto& [e, v] : G.bracket(kl.second, src[c].second)) {
        auto it = at.find({kl.first + src[c].first, e});
        if (it == at.end()) throw InvalidData("ad Lambda^2 is not homogeneous");
        m(it->second, c) += q * v;
      }
    }
  }
  return m;
}

std::unique_ptr<GradedPiece> LoopAlgebra::build(int gr) const {
  auto p = std::make_unique<GradedPiece>();
  p->grade = gr;
  p->basis = keys_of_grade(gr);
  for (std::size_t r = 0; r < p->basis.size(); ++r) p->index[p->basis[r]] = r;
  const std::size_t n = p->basis.size();
  p->kernel = nullspace(ad_lambda_sq_matrix(gr));
  Matrix into = ad_lambda_sq_matrix(gr + 2 * rd_->i);
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < into.cols(); ++c) cols.push_back(into.column(c));
  p->image = Subspace(n, cols).basis();

  std::vector<Vec> all = p->kernel;
  all.insert(all.end(), p->image.begin(), p->image.end());
  if (all.size() != n || (n > 0 && rank(Matrix::from_columns(all, n)) != n)) {
    std::ostringstream os;
    os << "ad Lambda^2 not semisimple at grade " << gr << ": dim K = " << p->kernel.size()
       << ", dim I = " << p->image.size() << ", dim = " << n;
    throw InvalidData(os.str());
  }
  p->proj_kernel = Matrix(n, n);
  p->proj_image = Matrix(n, n);
  if (n > 0) {
    Matrix inv = *spva::inverse(Matrix::from_columns(all, n));
    // coordinates c = inv * x; K part = sum over kernel columns.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t b = 0; b < all.size(); ++b) {
          Rational t = all[b][r] * inv(b, c);
          if (b < p->kernel.size())
            p->proj_kernel(r, c) += t;
          else
            p->proj_image(r, c) += t;
        }
  }
  return p;
}

std::vector<Vec> LoopAlgebra::center_of(const GradedPiece& p) const {
  if (p.kernel.empty()) return {};
  // x = sum c_r kernel_r must commute with every kernel element of every
  // grade in one period; commutation does not depend on z-shifts.
  std::vector<Vec> eqs;  // each row: coefficient of c_r
  for (int t = 0; t < period(); ++t) {
    const GradedPiece& q = piece(t);
    for (const Vec& y : q.kernel) {
      // [x_r, y] for each kernel vector x_r, collected as (k, a) components.
      std::map<LoopElem::Key, Vec> comps;
      for (std::size_t r = 0; r < p.kernel.size(); ++r) {
        LoopElem xr, ye;
        for (std::size_t i = 0; i < p.basis.size(); ++i)
          if (p.kernel[r][i] != 0) xr.add(p.basis[i].first, p.basis[i].second, SPoly(p.kernel[r][i]));
        for (std::size_t i = 0; i < q.basis.size(); ++i)
          if (y[i] != 0) ye.add(q.basis[i].first, q.basis[i].second, SPoly(y[i]));
        LoopElem br = bracket_impl(xr, ye, std::nullopt);
        for (const auto& [k, u] : br.terms()) {
          auto& row = comps[k];
          if (row.empty()) row.assign(p.kernel.size(), Rational());
          row[r] += u.constant_term();
        }
      }
      for (auto& [k, row] : comps) eqs.push_back(row);
    }
  }
  if (eqs.empty()) return p.kernel;
  Matrix m(eqs.size(), p.kernel.size());
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < p.kernel.size(); ++c) m(r, c) = eqs[r][c];
  std::vector<Vec> out;
  for (const Vec& c : nullspace(m)) {
    Vec v(p.basis.size());
    for (std::size_t r = 0; r < p.kernel.size(); ++r)
      if (c[r] != 0) v = v + c[r] * p.kernel[r];
    out.push_back(v);
  }
  return out;
}

const GradedPiece& LoopAlgebra::piece(int gr) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = pieces_.find(gr);
  if (it != pieces_.end()) return *it->second;
  GradedPiece& p = *pieces_.emplace(gr, build(gr)).first->second;
  p.center = center_of(p);
  return p;
}

std::vector<std::string> LoopAlgebra::semisimplicity_failures() const {
  std::vector<std::string> out;
  for (int t = 0; t < period(); ++t) {
    try {
      piece(t);
    } catch (const InvalidData& e) {
      out.push_back(e.what());
    }
  }
  return out;
}

const Matrix& LoopAlgebra::inverse(int gr) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = inverses_.find(gr);
  if (it != inverses_.end()) return *it->second;
  const GradedPiece& here = piece(gr);
  const GradedPiece& up = piece(gr + 2 * rd_->i);
  Matrix a = ad_lambda_sq_matrix(gr + 2 * rd_->i);
  const std::size_t n = here.basis.size();
  auto m = std::make_unique<Matrix>(up.basis.size(), n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec x = here.proj_image.column(c);
    if (is_zero(x)) continue;
    auto y = solve(a, x);
    if (!y) throw InvalidData("image of ad Lambda^2 not reached at grade " + std::to_string(gr));
    Vec yi = up.proj_image * *y;
    for (std::size_t r = 0; r < yi.size(); ++r) (*m)(r, c) = yi[r];
  }
  return *inverses_.emplace(gr, std::move(m)).first->second;
}

namespace {

// Components of x in one graded piece as a vector of polynomials.
std::vector<SPoly> piece_coords(const GradedPiece& p, const LoopElem& x, const LoopAlgebra& la) {
  std::vector<SPoly> v(p.basis.size());
  for (const auto& [k, u] : x.terms())
    if (la.grade(k) == p.grade) v[p.index.at(k)] = u;
  return v;
}

}  // namespace

std::pair<LoopElem, LoopElem> LoopAlgebra::split(const LoopElem& x) const {
  LoopElem kp, ip;
  if (x.is_zero()) return {kp, ip};
  std::set<int> grades;
  for (const auto& [k, u] : x.terms()) grades.insert(grade(k));
  for (int gr : grades) {
    const GradedPiece& p = piece(gr);
    auto v = piece_coords(p, x, *this);
    auto vk = apply_matrix(p.proj_kernel, v);
    auto vi = apply_matrix(p.proj_image, v);
    for (std::size_t r = 0; r < p.basis.size(); ++r) {
      kp.add(p.basis[r].first, p.basis[r].second, vk[r]);
      ip.add(p.basis[r].first, p.basis[r].second, vi[r]);
    }
  }
  return {kp, ip};
}

LoopElem LoopAlgebra::invert_ad_lambda_sq(const LoopElem& x) const {
  auto [kp, ip] = split(x);
  if (!kp.is_zero()) {
    std::ostringstream os;
    os << "right-hand side has a kernel component:";
    for (const auto& [k, u] : kp.terms()) os << " " << g().basis(k.second).name << "*z^" << k.first << " (" << u.size() << " terms)";
    throw InvalidData(os.str());
  }
  LoopElem r;
  std::set<int> grades;
  for (const auto& [k, u] : x.terms()) grades.insert(grade(k));
  for (int gr : grades) {
    const GradedPiece& p = piece(gr);
    const GradedPiece& up = piece(gr + 2 * rd_->i);
    auto y = apply_matrix(inverse(gr), piece_coords(p, x, *this));
    for (std::size_t r2 = 0; r2 < up.basis.size(); ++r2) r.add(up.basis[r2].first, up.basis[r2].second, y[r2]);
  }
  check_window(r);
  return r;
}

std::string LoopAlgebra::format(const LoopElem& x, const VariableSet& vars) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, u] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << g().basis(k.second).name;
    if (k.first == 1)
      os << "*z";
    else if (k.first != 0)
      os << "*z^" << k.first;
    os << " (x) (" << spva::format(u, vars) << ")";
  }
  return os.str();
}

}  // namespace spva
