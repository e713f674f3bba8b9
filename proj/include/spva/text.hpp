#pragma once

#include <string>
#include <string_view>

#include "spva/chipoly.hpp"
#include "spva/errors.hpp"
#include "spva/variable.hpp"

namespace spva {

enum class TextStyle { Plain, Latex };

std::string format(const Monomial& m, const VariableSet& vars, TextStyle style = TextStyle::Plain);
std::string format(const SPoly& p, const VariableSet& vars, TextStyle style = TextStyle::Plain);
// chi is written X in plain text.
std::string format(const ChiPoly& p, const VariableSet& vars, TextStyle style = TextStyle::Plain);

// Grammar: sums of products of factors.  A factor is a rational p or p/q, a
// variable with derivative marks (u, u', u'', u^(m)) and an optional power
// (u^2), or a parenthesised expression.  Unknown names are rejected.
SPoly parse_spoly(std::string_view text, const VariableSet& vars, int line = 1);
// As above, with the odd indeterminate X allowed anywhere in a product.
ChiPoly parse_chipoly(std::string_view text, const VariableSet& vars, int line = 1);

}  // namespace spva
