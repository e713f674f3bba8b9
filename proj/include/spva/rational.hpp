#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spva {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q".  Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace spva
