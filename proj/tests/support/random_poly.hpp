#pragma once

#include <random>
#include <vector>

#include "spva/spoly.hpp"

namespace spva::ref {

// Random polynomial: up to `terms` terms, each a product of up to `degree`
// derived variables of order <= max_order, small integer coefficients.
inline SPoly random_poly(std::mt19937& rng, const std::vector<Variable>& vars, int terms, int degree,
                         unsigned max_order) {
  std::uniform_int_distribution<int> nterms(1, terms);
  std::uniform_int_distribution<int> ndeg(0, degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<unsigned> ord(0, max_order);
  std::uniform_int_distribution<int> coef(-3, 3);
  SPoly p;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    SPoly m(coef(rng) == 0 ? 1 : coef(rng));
    int d = ndeg(rng);
    for (int k = 0; k < d; ++k) m = m * SPoly::var(vars[pick(rng)], ord(rng));
    p += m;
  }
  return p;
}

// Homogeneous parts are what the bracket identities are stated for.
inline SPoly random_homogeneous(std::mt19937& rng, const std::vector<Variable>& vars, int terms, int degree,
                                unsigned max_order, Parity parity) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto [e, o] = random_poly(rng, vars, terms, degree, max_order).split_parity();
    const SPoly& h = parity == Parity::Even ? e : o;
    if (!h.is_zero()) return h;
  }
  return parity == Parity::Even ? SPoly(1) : SPoly::var(vars.front());
}

}  // namespace spva::ref
