#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spva/reduction.hpp"
#include "spva/text.hpp"
#include "spva/spoly.hpp"

namespace spva {

// Element of g((z^-1)) (x) P: components a z^k (x) u keyed by (k, a).
class LoopElem {
 public:
  using Key = std::pair<int, std::size_t>;

  const std::map<Key, SPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const SPoly& at(int k, std::size_t a) const;
  void add(int k, std::size_t a, const SPoly& c);
  // Single component a z^k (x) c, or x z^k (x) c for a vector x.
  static LoopElem single(int k, std::size_t a, const SPoly& c);
  static LoopElem constant(int k, const Vec& x, const SPoly& c = SPoly(1));

  LoopElem operator-() const;
  LoopElem& operator+=(const LoopElem& o);
  LoopElem& operator-=(const LoopElem& o);
  LoopElem& operator*=(const Rational& q);
  friend LoopElem operator+(LoopElem a, const LoopElem& b) { return a += b; }
  friend LoopElem operator-(LoopElem a, const LoopElem& b) { return a -= b; }
  friend LoopElem operator*(const Rational& q, LoopElem a) { return a *= q; }
  friend bool operator==(const LoopElem&, const LoopElem&) = default;

  // Coefficient-wise maps.
  LoopElem homogeneous_part(unsigned deg) const;
  LoopElem z_part(int k) const;
  LoopElem substitute(const std::unordered_map<std::uint32_t, SPoly>& map) const;
  std::pair<int, int> z_range() const;  // requires nonzero

 private:
  std::map<Key, SPoly> t_;
};

// Kernel / image data of ad Lambda^2 on one graded piece of the loop algebra.
struct GradedPiece {
  int grade = 0;
  std::vector<LoopElem::Key> basis;
  std::map<LoopElem::Key, std::size_t> index;
  std::vector<Vec> kernel;
  std::vector<Vec> image;
  Matrix proj_kernel;   // onto K along I
  Matrix proj_image;    // onto I along K
  std::vector<Vec> center;
};

// Loop algebra of a reduction: grading with deg z = -i-j, the element
// Lambda = f + z s, and a z-window [zmin, zmax] outside which no component
// may be produced.
class LoopAlgebra {
 public:
  LoopAlgebra(std::shared_ptr<const ReductionData> rd, int zmin, int zmax);

  const ReductionData& reduction() const { return *rd_; }
  const std::shared_ptr<const ReductionData>& reduction_ptr() const { return rd_; }
  const LieSuperAlgebra& g() const { return rd_->g(); }
  int zmin() const { return zmin_; }
  int zmax() const { return zmax_; }
  int grade(const LoopElem::Key& k) const;
  int period() const { return rd_->i + rd_->j; }

  Parity parity(std::size_t a, const SPoly& u) const;
  // [x, y]; components of grade above max_grade are dropped.
  LoopElem bracket(const LoopElem& x, const LoopElem& y, std::optional<int> max_grade = std::nullopt) const;
  // [D, x] = sum (-1)^{p(a)} a z^k (x) u'.
  LoopElem D(const LoopElem& x) const;
  // (x|y) = sum (-1)^{p(b)p(u)} delta_{k+l,0} (a|b) u v.
  SPoly pairing(const LoopElem& x, const LoopElem& y) const;
  LoopElem grade_part(const LoopElem& x, int grade) const;
  LoopElem truncate(const LoopElem& x, int max_grade) const;
  std::pair<int, int> grade_range(const LoopElem& x) const;  // requires nonzero

  LoopElem lambda() const;
  LoopElem lambda_squared() const;

  // Piece of the given grade (independent of the window); throws
  // InvalidData if ad Lambda^2 is not semisimple there.
  const GradedPiece& piece(int grade) const;
  // Graded pieces of one period; a piece whose K and I do not span is
  // reported rather than thrown.
  std::vector<std::string> semisimplicity_failures() const;

  std::pair<LoopElem, LoopElem> split(const LoopElem& x) const;  // (K part, I part)
  // y in I with [Lambda^2, y] = x for x in I (x (x) P); throws InvalidData
  // with the K residue otherwise.
  LoopElem invert_ad_lambda_sq(const LoopElem& x) const;

  // Matrix from grade to grade + 2i sending x in I to its preimage in I.
  const Matrix& inverse(int grade) const;

  std::string format(const LoopElem& x, const VariableSet& vars) const;

 private:
  LoopElem bracket_impl(const LoopElem& x, const LoopElem& y, std::optional<int> max_grade) const;
  std::vector<LoopElem::Key> keys_of_grade(int grade) const;
  Matrix ad_lambda_sq_matrix(int from_grade) const;
  std::unique_ptr<GradedPiece> build(int grade) const;
  std::vector<Vec> center_of(const GradedPiece& p) const;
  void check_window(const LoopElem& x) const;

  std::shared_ptr<const ReductionData> rd_;
  int zmin_;
  int zmax_;
  LoopElem lambda_sq_;
  mutable std::recursive_mutex mu_;
  mutable std::map<int, std::unique_ptr<GradedPiece>> pieces_;
  mutable std::map<int, std::unique_ptr<Matrix>> inverses_;
};

// M times a vector of polynomials.
std::vector<SPoly> apply_matrix(const Matrix& m, const std::vector<SPoly>& v);

}  // namespace spva
