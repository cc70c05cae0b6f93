#pragma once

#include <string_view>

#include "jordan/ncpoly.hpp"

namespace jordan {

/// Parses the polynomial text grammar
///
///   polynomial = ["+"|"-"] term (("+"|"-") term)*
///   term       = rational | [rational "*"] factor ("*" factor)*
///   factor     = ("x"|"y") ["^" positive-int]
///   rational   = digits ["/" digits]
///
/// Whitespace is ignored. Throws ParseError with the failing offset.
NcPoly parse_ncpoly(std::string_view text);

}  // namespace jordan
