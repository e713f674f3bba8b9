#include "spva/bracket.hpp"

#include <map>

#include "spva/errors.hpp"

namespace spva {

namespace {

void check_variables(const BracketSpec& spec, const SPoly& p) {
  for (auto id : p.variables())
    if (!spec.index_of(id)) throw InvalidData("polynomial mentions a variable that is not a generator of the bracket");
}

ChiPoly signed_chi_plus_D(const ChiPoly& p, Parity pa) {
  ChiPoly r = p.chi_plus_D();
  return pa == Parity::Even ? -r : r;
}

}  // namespace

ChiPoly bracket_with_generator(const BracketSpec& spec, const SPoly& a, std::size_t j) {
  ChiPoly r;
  const Parity pj = spec.generators().at(j).parity;
  for (const auto& half : {a.split_parity().first, a.split_parity().second}) {
    if (half.is_zero()) continue;
    for (auto key : half.derived_keys()) {
      auto i = spec.index_of(key_var(key));
      if (!i) throw InvalidData("polynomial mentions a variable that is not a generator of the bracket");
      const SPoly ai = half.partial(key);
      if (ai.is_zero()) continue;
      const unsigned m = key_order(key);
      const Parity pi = spec.generators()[*i].parity;
      const Parity pA = ai.parity_or_even();
      const ChiPoly& G = spec.entry(*i, j);
      for (int k = 0; k <= G.degree(); ++k) {
        const SPoly& g = G.coeff(k);
        if (g.is_zero()) continue;
        const long km = k + static_cast<long>(m);
        long e = bit(pA) * bit(pj) + km * (bit(pi) + m + bit(pj)) + km * (km - 1) / 2;
        ChiPoly t = chi_plus_D_power(ai, static_cast<unsigned>(km)).left_mul(g);
        if (e & 1) {
          r -= t;
        } else {
          r += t;
        }
      }
    }
  }
  return r;
}

ChiPoly master_bracket(const BracketSpec& spec, const SPoly& a, const SPoly& b) {
  check_variables(spec, a);
  check_variables(spec, b);
  ChiPoly r;
  auto [ae, ao] = a.split_parity();
  for (const SPoly* half : {&ae, &ao}) {
    if (half->is_zero()) continue;
    const Parity pa = half->parity_or_even();
    std::map<std::size_t, std::vector<ChiPoly>> cache;  // j -> {a_chi u_j^(n)} by n
    for (auto key : b.derived_keys()) {
      const std::size_t j = *spec.index_of(key_var(key));
      const unsigned n = key_order(key);
      auto& seq = cache[j];
      if (seq.empty()) seq.push_back(bracket_with_generator(spec, *half, j));
      while (seq.size() <= n) seq.push_back(signed_chi_plus_D(seq.back(), pa));
      if (seq[n].is_zero()) continue;
      r += seq[n].right_mul(b.partial(key));
    }
  }
  return r;
}

SPoly hamiltonian_flow(const BracketSpec& spec, const SPoly& h, const SPoly& a) {
  return master_bracket(spec, h, a).at_zero();
}

Functional induced_bracket(const BracketSpec& spec, const Functional& f, const Functional& g) {
  return Functional(master_bracket(spec, f.density(), g.density()).at_zero());
}

}  // namespace spva
