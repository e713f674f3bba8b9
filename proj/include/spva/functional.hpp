#pragma once

#include <vector>

#include "spva/spoly.hpp"

namespace spva {

// Canonical representative of a polynomial modulo total derivatives.
// Within each piece of fixed variable content and derivative count the image
// of D is row reduced with pivots at the monomials whose top factor is
// highest; the representative carries no pivot monomials.
SPoly functional_normal_form(const SPoly& a);

// The same zero test through the variational complex: constant term zero
// and all variational derivatives zero.
bool functional_zero_by_variation(const SPoly& a);

// An element of P / DP, always stored in normal form.
class Functional {
 public:
  Functional() = default;
  explicit Functional(const SPoly& density) : nf_(functional_normal_form(density)) {}

  const SPoly& density() const { return nf_; }
  bool is_zero() const { return nf_.is_zero(); }

  Functional operator-() const { return Functional(-nf_); }
  friend Functional operator+(const Functional& a, const Functional& b) { return Functional(a.nf_ + b.nf_); }
  friend Functional operator-(const Functional& a, const Functional& b) { return Functional(a.nf_ - b.nf_); }
  friend Functional operator*(const Rational& q, const Functional& a) { return Functional(a.nf_ * q); }
  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  SPoly nf_;
};

}  // namespace spva
