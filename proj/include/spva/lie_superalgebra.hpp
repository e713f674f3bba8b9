#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spva/linalg.hpp"
#include "spva/parity.hpp"

namespace spva {

struct BasisElement {
  std::string name;
  Parity parity = Parity::Even;
  int degree = 0;
};

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// Finite-dimensional Z-graded Lie superalgebra with an invariant form, given
// by structure constants on a homogeneous basis.
class LieSuperAlgebra {
 public:
  LieSuperAlgebra() = default;
  LieSuperAlgebra(std::string name, std::vector<BasisElement> basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& basis(std::size_t a) const { return basis_.at(a); }
  std::size_t index(const std::string& name) const;  // throws if unknown
  Parity parity(std::size_t a) const { return basis_[a].parity; }
  int degree(std::size_t a) const { return basis_[a].degree; }

  // Sets [a,b] and, through skew-symmetry, [b,a].
  void set_bracket(std::size_t a, std::size_t b, const Vec& value);
  // Sets (a|b) and (b|a).
  void set_form(std::size_t a, std::size_t b, const Rational& value);

  const SparseVec& bracket(std::size_t a, std::size_t b) const { return br_[a * dim() + b]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  const Rational& form(std::size_t a, std::size_t b) const { return form_(a, b); }
  Rational form(const Vec& x, const Vec& y) const;
  const Matrix& form_matrix() const { return form_; }

  Vec unit(std::size_t a) const;
  Vec dense(const SparseVec& v) const;
  // Parity/degree of a homogeneous nonzero element; throws otherwise.
  Parity parity(const Vec& x) const;
  int degree(const Vec& x) const;
  std::string format(const Vec& x) const;

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
  std::map<std::string, std::size_t> index_;
  std::vector<SparseVec> br_;
  Matrix form_;
};

using LieSuperAlgebraPtr = std::shared_ptr<const LieSuperAlgebra>;

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first witness when failing
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

// Skew-symmetry, super Jacobi, form supersymmetric / even / invariant /
// nondegenerate, bracket and form compatible with the grading.
ValidationReport validate(const LieSuperAlgebra& g);

}  // namespace spva
