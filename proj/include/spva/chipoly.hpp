#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spva/spoly.hpp"

namespace spva {

// sum_n chi^n c_n with the odd indeterminate chi kept on the left.  D acts
// through D chi + chi D = -2 chi^2.
class ChiPoly {
 public:
  ChiPoly() = default;
  ChiPoly(SPoly c0);  // NOLINT
  static ChiPoly monomial(int n, SPoly c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const SPoly& coeff(int n) const;
  const std::vector<SPoly>& coeffs() const { return c_; }
  void add_term(int n, const SPoly& c);
  SPoly at_zero() const { return coeff(0); }

  std::optional<Parity> parity() const;  // total parity, chi counted as odd

  ChiPoly operator-() const;
  ChiPoly& operator+=(const ChiPoly& o);
  ChiPoly& operator-=(const ChiPoly& o);
  ChiPoly& operator*=(const Rational& q);
  friend ChiPoly operator+(ChiPoly a, const ChiPoly& b) { return a += b; }
  friend ChiPoly operator-(ChiPoly a, const ChiPoly& b) { return a -= b; }
  friend ChiPoly operator*(ChiPoly a, const Rational& q) { return a *= q; }
  friend ChiPoly operator*(const Rational& q, ChiPoly a) { return a *= q; }
  friend bool operator==(const ChiPoly&, const ChiPoly&) = default;

  ChiPoly chi() const;            // chi * this
  ChiPoly D() const;              // module action of D
  ChiPoly chi_plus_D() const;     // (chi + D) this
  ChiPoly left_mul(const SPoly& x) const;   // x * this
  ChiPoly right_mul(const SPoly& x) const;  // this * x
  ChiPoly right_mul_chi() const;            // this * chi

 private:
  void trim();
  std::vector<SPoly> c_;
};

// (chi + D)^k applied to a chi-free element.
ChiPoly chi_plus_D_power(const SPoly& y, unsigned k);

// sum_n (-D - chi)^n c_n: the skew-symmetry substitution.
ChiPoly skew_substitute(const ChiPoly& p);

// Polynomial in two odd indeterminates, normal ordered chi^a gamma^b on the
// left of the coefficient.
class ChiGammaPoly {
 public:
  using Key = std::pair<int, int>;

  const std::map<Key, SPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(int a, int b, const SPoly& c);
  ChiGammaPoly& operator+=(const ChiGammaPoly& o);
  ChiGammaPoly& operator-=(const ChiGammaPoly& o);
  friend ChiGammaPoly operator-(ChiGammaPoly a, const ChiGammaPoly& b) { return a -= b; }
  friend bool operator==(const ChiGammaPoly&, const ChiGammaPoly&) = default;

  // chi^a gamma^b * this
  ChiGammaPoly left_mul_monomial(int a, int b) const;

  // Interprets p as a polynomial in the single variable mu and substitutes
  // mu -> chi + gamma.
  static ChiGammaPoly substitute_sum(const ChiPoly& p);
  // p(chi) or p(gamma) embedded.
  static ChiGammaPoly in_chi(const ChiPoly& p);
  static ChiGammaPoly in_gamma(const ChiPoly& p);

 private:
  std::map<Key, SPoly> t_;
};

}  // namespace spva
