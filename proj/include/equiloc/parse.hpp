#pragma once

#include <string_view>

#include "equiloc/polynomial.hpp"

namespace equiloc {

// Polynomial text grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | variable | '(' expr ')'
// Variables: z<i>, l<i>, e<i>, c<i>, a<i>, f<coord>_<order>, h, d, delta, m.
// Whitespace is insignificant. Throws Error(parse) with the offending offset.
Polynomial parse_polynomial(std::string_view text, RingPtr ring = nullptr);

}  // namespace equiloc
