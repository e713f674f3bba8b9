#include "spva/spoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace spva {

namespace {

bool odd(const Factor& f) { return key_parity(f.key) == Parity::Odd; }

void add_sorted(std::vector<SPoly::Term>& dst, std::vector<SPoly::Term>&& extra) {
  std::vector<SPoly::Term> out;
  out.reserve(dst.size() + extra.size());
  auto a = dst.begin();
  auto b = extra.begin();
  while (a != dst.end() && b != extra.end()) {
    if (a->first < b->first) {
      out.push_back(std::move(*a++));
    } else if (b->first < a->first) {
      out.push_back(std::move(*b++));
    } else {
      a->second += b->second;
      if (a->second != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  for (; a != dst.end(); ++a) out.push_back(std::move(*a));
  for (; b != extra.end(); ++b) out.push_back(std::move(*b));
  dst = std::move(out);
}

}  // namespace

Parity Monomial::parity() const {
  Parity p = Parity::Even;
  for (const auto& f : f_)
    if (odd(f)) p += Parity::Odd;
  return p;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : f_) d += f.exp;
  return d;
}

unsigned Monomial::total_order() const {
  unsigned d = 0;
  for (const auto& f : f_) d += key_order(f.key) * f.exp;
  return d;
}

int Monomial::multiply(const Monomial& a, const Monomial& b, Monomial& out) {
  auto& o = out.f_;
  o.clear();
  o.reserve(a.f_.size() + b.f_.size());
  int odd_left = 0;
  for (const auto& f : a.f_)
    if (odd(f)) ++odd_left;
  int s = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    const Factor& x = a.f_[i];
    const Factor& y = b.f_[j];
    if (x.key < y.key) {
      if (odd(x)) --odd_left;
      o.push_back(x);
      ++i;
    } else if (y.key < x.key) {
      if (odd(y) && (odd_left & 1)) s = -s;
      o.push_back(y);
      ++j;
    } else {
      if (odd(x)) return 0;
      o.push_back({x.key, x.exp + y.exp});
      ++i;
      ++j;
    }
  }
  for (; i < a.f_.size(); ++i) o.push_back(a.f_[i]);
  for (; j < b.f_.size(); ++j) o.push_back(b.f_[j]);
  return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& f : m.factors()) {
    h ^= (static_cast<std::size_t>(f.key) << 8 | f.exp) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SPoly::SPoly(const Rational& c) {
  if (c != 0) t_.emplace_back(Monomial{}, c);
}

SPoly SPoly::var(Variable v, unsigned order) {
  if (order > kMaxOrder) throw std::overflow_error("derivative order too large");
  SPoly p;
  p.t_.emplace_back(Monomial({{derived_key(v, order), 1}}), Rational(1));
  return p;
}

SPoly SPoly::term(Monomial m, Rational c) {
  SPoly p;
  if (c != 0) p.t_.emplace_back(std::move(m), std::move(c));
  return p;
}

SPoly SPoly::from_terms(std::vector<Term> terms) {
  SPoly p;
  p.t_ = std::move(terms);
  p.normalize();
  return p;
}

void SPoly::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  t_ = std::move(out);
}

Rational SPoly::constant_term() const {
  if (!t_.empty() && t_.front().first.empty()) return t_.front().second;
  return 0;
}

Rational SPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != t_.end() && it->first == m) return it->second;
  return 0;
}

std::optional<Parity> SPoly::parity() const {
  if (t_.empty()) return std::nullopt;
  Parity p = t_.front().first.parity();
  for (const auto& t : t_)
    if (t.first.parity() != p) throw std::domain_error("polynomial is not homogeneous in parity");
  return p;
}

std::pair<SPoly, SPoly> SPoly::split_parity() const {
  SPoly e;
  SPoly o;
  for (const auto& t : t_) (t.first.parity() == Parity::Even ? e : o).t_.push_back(t);
  return {std::move(e), std::move(o)};
}

unsigned SPoly::degree() const {
  unsigned d = 0;
  for (const auto& t : t_) d = std::max(d, t.first.degree());
  return d;
}

SPoly SPoly::homogeneous_part(unsigned deg) const {
  SPoly p;
  for (const auto& t : t_)
    if (t.first.degree() == deg) p.t_.push_back(t);
  return p;
}

unsigned SPoly::max_order() const {
  unsigned d = 0;
  for (const auto& t : t_)
    for (const auto& f : t.first.factors()) d = std::max(d, key_order(f.key));
  return d;
}

std::vector<DerivedKey> SPoly::derived_keys() const {
  std::vector<DerivedKey> ks;
  for (const auto& t : t_)
    for (const auto& f : t.first.factors()) ks.push_back(f.key);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::vector<std::uint32_t> SPoly::variables() const {
  std::vector<std::uint32_t> vs;
  for (auto k : derived_keys()) vs.push_back(key_var(k));
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

SPoly SPoly::operator-() const {
  SPoly p = *this;
  for (auto& t : p.t_) t.second = -t.second;
  return p;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  if (o.t_.empty()) return *this;
  auto copy = o.t_;
  add_sorted(t_, std::move(copy));
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  if (o.t_.empty()) return *this;
  auto copy = o.t_;
  for (auto& t : copy) t.second = -t.second;
  add_sorted(t_, std::move(copy));
  return *this;
}

SPoly& SPoly::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
  } else {
    for (auto& t : t_) t.second *= c;
  }
  return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.t_.size() == 1 && a.t_[0].first.empty()) return b * a.t_[0].second;
  if (b.t_.size() == 1 && b.t_[0].first.empty()) return a * b.t_[0].second;
  std::vector<SPoly::Term> out;
  out.reserve(a.t_.size() * b.t_.size());
  Monomial m;
  for (const auto& x : a.t_) {
    for (const auto& y : b.t_) {
      int s = Monomial::multiply(x.first, y.first, m);
      if (s == 0) continue;
      Rational c = x.second * y.second;
      if (s < 0) c = -c;
      out.emplace_back(m, std::move(c));
    }
  }
  return SPoly::from_terms(std::move(out));
}

SPoly SPoly::D() const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    const auto& fs = t.first.factors();
    Parity prefix = Parity::Even;
    for (std::size_t l = 0; l < fs.size(); ++l) {
      const Factor& x = fs[l];
      if (key_order(x.key) >= kMaxOrder) throw std::overflow_error("derivative order too large");
      DerivedKey dk = x.key + 2;
      bool next_same = l + 1 < fs.size() && fs[l + 1].key == dk;
      Rational c = t.second;
      if (prefix == Parity::Odd) c = -c;
      std::vector<Factor> nf;
      nf.reserve(fs.size() + 1);
      nf.insert(nf.end(), fs.begin(), fs.begin() + static_cast<long>(l));
      if (!odd(x)) {
        // x^e even, x' odd
        if (next_same) continue;
        c *= x.exp;
        if (x.exp > 1) nf.push_back({x.key, x.exp - 1});
        nf.push_back({dk, 1});
        nf.insert(nf.end(), fs.begin() + static_cast<long>(l) + 1, fs.end());
      } else {
        // x odd, x' even
        if (next_same) {
          nf.push_back({dk, fs[l + 1].exp + 1});
          nf.insert(nf.end(), fs.begin() + static_cast<long>(l) + 2, fs.end());
        } else {
          nf.push_back({dk, 1});
          nf.insert(nf.end(), fs.begin() + static_cast<long>(l) + 1, fs.end());
        }
      }
      out.emplace_back(Monomial(std::move(nf)), std::move(c));
      if (odd(x)) prefix += Parity::Odd;
    }
  }
  return from_terms(std::move(out));
}

SPoly SPoly::D(unsigned k) const {
  SPoly p = *this;
  for (unsigned i = 0; i < k; ++i) p = p.D();
  return p;
}

SPoly SPoly::partial(Variable v, unsigned order) const { return partial(derived_key(v, order)); }

SPoly SPoly::partial(DerivedKey key) const {
  std::vector<Term> out;
  const bool dodd = key_parity(key) == Parity::Odd;
  for (const auto& t : t_) {
    const auto& fs = t.first.factors();
    Parity prefix = Parity::Even;
    for (std::size_t l = 0; l < fs.size(); ++l) {
      if (fs[l].key == key) {
        Rational c = t.second;
        if (dodd && prefix == Parity::Odd) c = -c;
        c *= fs[l].exp;
        std::vector<Factor> nf(fs.begin(), fs.end());
        if (fs[l].exp > 1) {
          nf[l].exp -= 1;
        } else {
          nf.erase(nf.begin() + static_cast<long>(l));
        }
        out.emplace_back(Monomial(std::move(nf)), std::move(c));
        break;
      }
      if (odd(fs[l])) prefix += Parity::Odd;
    }
  }
  return from_terms(std::move(out));
}

SPoly SPoly::variational(Variable v) const {
  SPoly r;
  unsigned top = 0;
  for (auto k : derived_keys())
    if (key_var(k) == v.id) top = std::max(top, key_order(k));
  for (unsigned m = 0; m <= top; ++m) {
    SPoly p = partial(v, m);
    if (p.is_zero()) continue;
    long e = static_cast<long>(m) * bit(v.parity) + static_cast<long>(m) * (m + 1) / 2;
    p = p.D(m);
    if (e & 1) {
      r -= p;
    } else {
      r += p;
    }
  }
  return r;
}

SPoly SPoly::substitute(const std::unordered_map<std::uint32_t, SPoly>& map) const {
  std::unordered_map<DerivedKey, SPoly> cache;
  auto image = [&](DerivedKey k) -> const SPoly& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    auto m = map.find(key_var(k));
    SPoly img;
    if (m == map.end()) {
      img = SPoly::var(key_variable(k), key_order(k));
    } else {
      img = m->second.D(key_order(k));
    }
    return cache.emplace(k, std::move(img)).first->second;
  };
  SPoly r;
  for (const auto& t : t_) {
    SPoly acc(t.second);
    for (const auto& f : t.first.factors()) {
      const SPoly& x = image(f.key);
      for (std::uint32_t e = 0; e < f.exp; ++e) acc = acc * x;
      if (acc.is_zero()) break;
    }
    r += acc;
  }
  return r;
}

}  // namespace spva
