#include "spva/functional.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace spva {

namespace {

// Larger means a higher top factor (compared from the highest factor down).
bool nf_less(const Monomial& a, const Monomial& b) {
  const auto& x = a.factors();
  const auto& y = b.factors();
  auto i = x.rbegin();
  auto j = y.rbegin();
  for (; i != x.rend() && j != y.rend(); ++i, ++j) {
    if (i->key != j->key) return i->key < j->key;
    if (i->exp != j->exp) return i->exp < j->exp;
  }
  return j != y.rend() && i == x.rend();
}

struct NfLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return nf_less(a, b); }
};

using Row = std::map<Monomial, Rational, NfLess>;

// Base variables with multiplicity, and the derivative count.
struct PieceKey {
  std::vector<std::pair<DerivedKey, unsigned>> content;  // (order-0 key, multiplicity)
  unsigned order = 0;
  friend auto operator<=>(const PieceKey&, const PieceKey&) = default;
};

PieceKey piece_of(const Monomial& m) {
  PieceKey k;
  for (const auto& f : m.factors()) {
    DerivedKey base = derived_key(key_variable(f.key), 0);
    if (!k.content.empty() && k.content.back().first == base) {
      k.content.back().second += f.exp;
    } else {
      k.content.emplace_back(base, f.exp);
    }
    k.order += key_order(f.key) * f.exp;
  }
  return k;
}

// Multisets of derivative orders for r copies of one variable summing to s;
// odd derived variables may not repeat.
void order_multisets(Parity base, unsigned r, unsigned s, unsigned min_order, std::vector<Factor>& cur,
                     DerivedKey key0, std::vector<std::vector<Factor>>& out) {
  if (r == 0) {
    if (s == 0) out.push_back(cur);
    return;
  }
  for (unsigned m = min_order; m * r <= s + 0 && m <= s; ++m) {
    bool odd = ((bit(base) + m) & 1) != 0;
    unsigned maxe = odd ? 1 : r;
    for (unsigned e = 1; e <= maxe; ++e) {
      if (m * e > s) break;
      cur.push_back({key0 + 2 * m, e});
      order_multisets(base, r - e, s - m * e, m + 1, cur, key0, out);
      cur.pop_back();
    }
  }
}

std::vector<Monomial> piece_basis(const PieceKey& k, unsigned order) {
  std::vector<std::vector<Factor>> acc{{}};
  std::vector<unsigned> budget_left;
  // distribute the order among the variables, then the multisets per variable
  std::vector<Monomial> out;
  std::vector<Factor> cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned left) {
    if (idx == k.content.size()) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    auto [key0, r] = k.content[idx];
    for (unsigned s = 0; s <= left; ++s) {
      std::vector<std::vector<Factor>> ms;
      std::vector<Factor> tmp;
      order_multisets(key_base_parity(key0), r, s, 0, tmp, key0, ms);
      for (auto& m : ms) {
        std::size_t mark = cur.size();
        cur.insert(cur.end(), m.begin(), m.end());
        rec(idx + 1, left - s);
        cur.resize(mark);
      }
    }
  };
  rec(0, order);
  return out;
}

struct Echelon {
  std::map<Monomial, Row, NfLess> rows;  // pivot -> row with pivot coefficient 1
};

void reduce(Row& v, const Echelon& e) {
  // eliminate pivots from the top down; rows only carry smaller monomials
  auto it = v.end();
  while (it != v.begin()) {
    --it;
    auto p = e.rows.find(it->first);
    if (p == e.rows.end()) continue;
    Rational c = it->second;
    Monomial key = it->first;
    for (const auto& [m, q] : p->second) {
      auto& slot = v[m];
      slot -= c * q;
    }
    // erase zeros (the pivot itself in particular) and restart from key
    for (auto z = v.begin(); z != v.end();) {
      if (z->second == 0) {
        z = v.erase(z);
      } else {
        ++z;
      }
    }
    it = v.lower_bound(key);
  }
}

const Echelon& echelon_for(const PieceKey& k) {
  static std::mutex mu;
  static std::map<PieceKey, Echelon> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto found = cache.find(k);
  if (found != cache.end()) return found->second;
  Echelon e;
  for (const auto& m : piece_basis(k, k.order - 1)) {
    SPoly d = SPoly::term(m, 1).D();
    Row row;
    for (const auto& [mm, c] : d.terms()) row.emplace(mm, c);
    reduce(row, e);
    if (row.empty()) continue;
    auto top = std::prev(row.end());
    Rational inv = 1 / top->second;
    for (auto& [mm, c] : row) c *= inv;
    Monomial pivot = top->first;
    // keep earlier rows free of the new pivot
    for (auto& [pm, r] : e.rows) {
      auto hit = r.find(pivot);
      if (hit == r.end()) continue;
      Rational c = hit->second;
      for (const auto& [mm, q] : row) {
        auto& slot = r[mm];
        slot -= c * q;
      }
      for (auto z = r.begin(); z != r.end();) {
        if (z->second == 0) {
          z = r.erase(z);
        } else {
          ++z;
        }
      }
    }
    e.rows.emplace(pivot, std::move(row));
  }
  return cache.emplace(k, std::move(e)).first->second;
}

}  // namespace

SPoly functional_normal_form(const SPoly& a) {
  std::map<PieceKey, Row> pieces;
  for (const auto& [m, c] : a.terms()) pieces[piece_of(m)].emplace(m, c);
  std::vector<SPoly::Term> out;
  for (auto& [k, row] : pieces) {
    if (k.order > 0) reduce(row, echelon_for(k));
    for (auto& [m, c] : row) out.emplace_back(m, c);
  }
  return SPoly::from_terms(std::move(out));
}

bool functional_zero_by_variation(const SPoly& a) {
  if (a.constant_term() != 0) return false;
  for (auto id : a.variables()) {
    for (auto k : a.derived_keys()) {
      if (key_var(k) != id) continue;
      if (!a.variational(key_variable(k)).is_zero()) return false;
      break;
    }
  }
  return true;
}

}  // namespace spva
