#pragma once

#include <string>
#include <string_view>

#include "spva/lie_superalgebra.hpp"
#include "spva/reduction.hpp"

namespace spva {

struct AlgebraInput {
  LieSuperAlgebra algebra;
  ReductionInput reduction;
};

// {"name": .., "basis": [{"name", "parity", "degree"}],
//  "brackets": [[a, b, {c: coeff}]], "form": [[a, b, coeff]],
//  "reduction": {"n": [vec], "m": [vec], "f": vec, "s": vec,
//                "V": [vec] (optional), "bminus": [name] (optional)}}
// Vectors are objects {basis name: coeff}; coefficients are integers or
// strings "p/q"; parity is "even"/"odd" or 0/1.  Malformed JSON throws
// ParseError with line and column; schema violations throw InvalidData naming
// the offending entry.
AlgebraInput parse_algebra_json(std::string_view text);
std::string algebra_to_json(const LieSuperAlgebra& g, const ReductionInput& r);

}  // namespace spva
