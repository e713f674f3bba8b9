#pragma once

#include "spva/bracket_spec.hpp"

namespace spva::ref {

// Recursive bracket evaluation, independent of the master formula: right
// Leibniz on the second argument, sesquilinearity, and skew-symmetry to move
// a composite first argument to the right.
ChiPoly oracle_bracket(const BracketSpec& spec, const SPoly& a, const SPoly& b);

}  // namespace spva::ref
