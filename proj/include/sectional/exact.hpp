#pragma once

// Exact integer and rational arithmetic plus the generalized factorial and
// binomial functions used throughout. Arguments may be any integer; nothing is
// clamped to the nonnegative range.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sectional {

using Integer = mpz_class;
using Rational = mpq_class;

/// m(m+1)...(m+k-1); 1 when k = 0.
Integer rising_factorial(const Integer& m, unsigned k);

/// m(m-1)...(m-k+1); 1 when k = 0.
Integer falling_factorial(const Integer& m, unsigned k);

Integer factorial(unsigned k);

/// [m]_k / k! for any integer m. The division is always exact.
Integer binomial(const Integer& m, unsigned k);

bool is_integer(const Rational& q);

/// Requires is_integer(q).
Integer to_integer(const Rational& q);

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on malformed text or
/// a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 1, or "p" when the value is an integer.
std::string format_rational(const Rational& q);

/// Throws Error(NonIntegral) unless the value fits in a long.
long to_long(const Integer& z);

}  // namespace sectional
