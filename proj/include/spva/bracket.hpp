#pragma once

#include "spva/bracket_spec.hpp"
#include "spva/functional.hpp"

namespace spva {

// {a_chi b} from the generator table through the master formula: a double
// sum over the derived variables u_i^(m) of a and u_j^(n) of b.
// Throws InvalidData when a or b mention a variable outside the spec.
ChiPoly master_bracket(const BracketSpec& spec, const SPoly& a, const SPoly& b);

// {a_chi u_j} for a generator u_j (the inner sum of the master formula).
ChiPoly bracket_with_generator(const BracketSpec& spec, const SPoly& a, std::size_t j);

// da/dt = {h_chi a}|_{chi=0}; depends only on the functional of h.
SPoly hamiltonian_flow(const BracketSpec& spec, const SPoly& h, const SPoly& a);
inline SPoly hamiltonian_flow(const BracketSpec& spec, const Functional& h, const SPoly& a) {
  return hamiltonian_flow(spec, h.density(), a);
}

// {int f, int g} = int {f_chi g}|_{chi=0}
Functional induced_bracket(const BracketSpec& spec, const Functional& f, const Functional& g);

}  // namespace spva
