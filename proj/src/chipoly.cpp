#include "spva/chipoly.hpp"

namespace spva {

namespace {
const SPoly kZero;
}

ChiPoly::ChiPoly(SPoly c0) {
  if (!c0.is_zero()) c_.push_back(std::move(c0));
}

ChiPoly ChiPoly::monomial(int n, SPoly c) {
  ChiPoly p;
  p.add_term(n, c);
  return p;
}

const SPoly& ChiPoly::coeff(int n) const {
  if (n < 0 || n >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(n)];
}

void ChiPoly::add_term(int n, const SPoly& c) {
  if (c.is_zero()) return;
  if (n >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(n) + 1);
  c_[static_cast<std::size_t>(n)] += c;
  trim();
}

void ChiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<Parity> ChiPoly::parity() const {
  std::optional<Parity> p;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    auto q = c_[n].parity();
    if (!q) continue;
    Parity t = *q + parity_of(static_cast<long>(n));
    if (p && *p != t) throw std::domain_error("chi-polynomial is not homogeneous in parity");
    p = t;
  }
  return p;
}

ChiPoly ChiPoly::operator-() const {
  ChiPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

ChiPoly& ChiPoly::operator+=(const ChiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
  trim();
  return *this;
}

ChiPoly& ChiPoly::operator-=(const ChiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
  trim();
  return *this;
}

ChiPoly& ChiPoly::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  trim();
  return *this;
}

ChiPoly ChiPoly::chi() const {
  ChiPoly p;
  if (c_.empty()) return p;
  p.c_.reserve(c_.size() + 1);
  p.c_.emplace_back();
  for (const auto& c : c_) p.c_.push_back(c);
  return p;
}

ChiPoly ChiPoly::D() const {
  ChiPoly p;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    if (c_[n].is_zero()) continue;
    int k = static_cast<int>(n);
    if (n % 2 == 0) {
      p.add_term(k, c_[n].D());
    } else {
      p.add_term(k, -c_[n].D());
      p.add_term(k + 1, c_[n] * Rational(-2));
    }
  }
  return p;
}

ChiPoly ChiPoly::chi_plus_D() const { return chi() + D(); }

ChiPoly ChiPoly::left_mul(const SPoly& x) const {
  auto [xe, xo] = x.split_parity();
  ChiPoly p;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    SPoly t = xe * c_[n];
    if (!xo.is_zero()) {
      SPoly u = xo * c_[n];
      if (n % 2) {
        t -= u;
      } else {
        t += u;
      }
    }
    p.add_term(static_cast<int>(n), t);
  }
  return p;
}

ChiPoly ChiPoly::right_mul(const SPoly& x) const {
  ChiPoly p;
  for (std::size_t n = 0; n < c_.size(); ++n) p.add_term(static_cast<int>(n), c_[n] * x);
  return p;
}

ChiPoly ChiPoly::right_mul_chi() const {
  ChiPoly p;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    auto [e, o] = c_[n].split_parity();
    p.add_term(static_cast<int>(n) + 1, e - o);
  }
  return p;
}

ChiPoly chi_plus_D_power(const SPoly& y, unsigned k) {
  ChiPoly p(y);
  for (unsigned i = 0; i < k; ++i) p = p.chi_plus_D();
  return p;
}

ChiPoly skew_substitute(const ChiPoly& p) {
  ChiPoly r;
  for (int n = 0; n <= p.degree(); ++n) {
    if (p.coeff(n).is_zero()) continue;
    ChiPoly t(p.coeff(n));
    for (int i = 0; i < n; ++i) t = -t.chi_plus_D();
    r += t;
  }
  return r;
}

void ChiGammaPoly::add_term(int a, int b, const SPoly& c) {
  if (c.is_zero()) return;
  auto it = t_.find({a, b});
  if (it == t_.end()) {
    t_.emplace(Key{a, b}, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

ChiGammaPoly& ChiGammaPoly::operator+=(const ChiGammaPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

ChiGammaPoly& ChiGammaPoly::operator-=(const ChiGammaPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
  return *this;
}

ChiGammaPoly ChiGammaPoly::left_mul_monomial(int a, int b) const {
  ChiGammaPoly r;
  for (const auto& [k, c] : t_) {
    SPoly v = (b % 2 && k.first % 2) ? -c : c;
    r.add_term(a + k.first, b + k.second, v);
  }
  return r;
}

ChiGammaPoly ChiGammaPoly::substitute_sum(const ChiPoly& p) {
  ChiGammaPoly r;
  std::map<Key, Rational> power{{{0, 0}, Rational(1)}};
  for (int n = 0; n <= p.degree(); ++n) {
    if (n > 0) {
      std::map<Key, Rational> next;
      for (const auto& [k, c] : power) {
        next[{k.first + 1, k.second}] += (k.second % 2) ? Rational(-c) : c;
        next[{k.first, k.second + 1}] += c;
      }
      power.clear();
      for (auto& [k, c] : next)
        if (c != 0) power.emplace(k, c);
    }
    const SPoly& c = p.coeff(n);
    if (c.is_zero()) continue;
    for (const auto& [k, q] : power) r.add_term(k.first, k.second, c * q);
  }
  return r;
}

ChiGammaPoly ChiGammaPoly::in_chi(const ChiPoly& p) {
  ChiGammaPoly r;
  for (int n = 0; n <= p.degree(); ++n) r.add_term(n, 0, p.coeff(n));
  return r;
}

ChiGammaPoly ChiGammaPoly::in_gamma(const ChiPoly& p) {
  ChiGammaPoly r;
  for (int n = 0; n <= p.degree(); ++n) r.add_term(0, n, p.coeff(n));
  return r;
}

}  // namespace spva
