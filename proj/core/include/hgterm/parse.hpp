#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "hgterm/poly.hpp"

namespace hgterm {

/// Parses a polynomial in z1..zk. Grammar: integer and rational literals,
/// + - * and ^ with a nonnegative integer exponent, parentheses. Implicit
/// multiplication is rejected. Whitespace is insignificant.
MultiPoly parse_poly(std::string_view text, std::size_t arity);

/// Splits a top-level product "f1^e1 * f2 * ..." into its factors without
/// expanding; any other expression comes back as a single factor.
std::vector<std::pair<MultiPoly, unsigned>> parse_product(std::string_view text,
                                                          std::size_t arity);

/// Same grammar with the single variable t.
UniPoly parse_unipoly(std::string_view text);

}  // namespace hgterm
