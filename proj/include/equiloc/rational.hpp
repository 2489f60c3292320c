#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace equiloc {

using Rational = mpq_class;
using Integer = mpz_class;

// "a" or "a/b" with optional sign; throws Error(parse) on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace equiloc
