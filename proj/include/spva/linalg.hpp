#pragma once

#include <optional>
#include <vector>

#include "spva/rational.hpp"

namespace spva {

using Vec = std::vector<Rational>;

// Dense exact matrix, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  Vec column(std::size_t j) const;
  Vec operator*(const Vec& x) const;
  Matrix operator*(const Matrix& o) const;

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<Rational> d_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// L with L*m = 1 for m of full column rank; nullopt otherwise.
std::optional<Matrix> left_inverse(const Matrix& m);

// Span of a set of vectors, kept as an independent subset with a stored left
// inverse for coordinate lookups.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vec>& spanning);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  // Coordinates in basis(), or nullopt when x is outside the span.
  std::optional<Vec> coordinates(const Vec& x) const;
  bool contains(const Vec& x) const { return coordinates(x).has_value(); }
  const Matrix& matrix() const { return m_; }        // basis as columns
  const Matrix& left_inverse() const { return inv_; }

 private:
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  Matrix m_;
  Matrix inv_;
};

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& q, const Vec& a);

}  // namespace spva
