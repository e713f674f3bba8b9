#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spva/parity.hpp"
#include "spva/rational.hpp"
#include "spva/variable.hpp"

namespace spva {

// u_i^(m) packed as (var << 9) | (m << 1) | parity(u_i), so that key order is
// (variable, derivative order).
using DerivedKey = std::uint32_t;

inline constexpr unsigned kMaxOrder = 255;

constexpr DerivedKey derived_key(Variable v, unsigned order) {
  return (v.id << 9) | (order << 1) | static_cast<DerivedKey>(bit(v.parity));
}
constexpr std::uint32_t key_var(DerivedKey k) { return k >> 9; }
constexpr unsigned key_order(DerivedKey k) { return (k >> 1) & 0xffu; }
constexpr Parity key_base_parity(DerivedKey k) { return parity_of(k & 1u); }
constexpr Parity key_parity(DerivedKey k) { return parity_of((k & 1u) + key_order(k)); }
constexpr Variable key_variable(DerivedKey k) { return {key_var(k), key_base_parity(k)}; }

struct Factor {
  DerivedKey key;
  std::uint32_t exp;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

// Ordered product of derived variables with sorted keys; odd factors have
// exponent 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Factor> f) : f_(std::move(f)) {}

  const std::vector<Factor>& factors() const { return f_; }
  std::vector<Factor>& factors() { return f_; }
  bool empty() const { return f_.empty(); }
  std::size_t size() const { return f_.size(); }
  Parity parity() const;
  unsigned degree() const;
  unsigned total_order() const;

  // Product a*b reordered into canonical order.  Returns 0 when an odd
  // factor repeats, otherwise the reordering sign.
  static int multiply(const Monomial& a, const Monomial& b, Monomial& out);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Supercommutative differential polynomial with rational coefficients.
// Terms are kept sorted by monomial with nonzero coefficients.
class SPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  SPoly() = default;
  SPoly(const Rational& c);  // NOLINT: constants convert implicitly
  SPoly(long c) : SPoly(Rational(c)) {}  // NOLINT

  static SPoly var(Variable v, unsigned order = 0);
  static SPoly term(Monomial m, Rational c);
  static SPoly from_terms(std::vector<Term> terms);  // combines and sorts

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;

  // Parity of a homogeneous polynomial; nullopt for zero; throws
  // std::domain_error if mixed.
  std::optional<Parity> parity() const;
  Parity parity_or_even() const { return parity().value_or(Parity::Even); }
  std::pair<SPoly, SPoly> split_parity() const;

  unsigned degree() const;
  SPoly homogeneous_part(unsigned deg) const;
  unsigned max_order() const;
  std::vector<DerivedKey> derived_keys() const;  // sorted, distinct
  std::vector<std::uint32_t> variables() const;  // sorted ids

  SPoly operator-() const;
  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  SPoly& operator*=(const Rational& c);
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(SPoly a, const Rational& c) { return a *= c; }
  friend SPoly operator*(const Rational& c, SPoly a) { return a *= c; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend bool operator==(const SPoly&, const SPoly&) = default;

  SPoly D() const;
  SPoly D(unsigned k) const;
  // Left partial derivative by u^(order); a derivation of parity p(u)+order.
  SPoly partial(Variable v, unsigned order) const;
  SPoly partial(DerivedKey k) const;
  SPoly variational(Variable v) const;

  // Replaces every u by map[u] (and u^(k) by D^k map[u]); unmapped
  // variables stay.
  SPoly substitute(const std::unordered_map<std::uint32_t, SPoly>& map) const;

 private:
  void normalize();
  std::vector<Term> t_;
};

}  // namespace spva
