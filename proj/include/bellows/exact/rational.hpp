#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bellows {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes on construction and after arithmetic).
using Rational = mpq_class;

/// Parses "p", "p/q" or a decimal literal such as "-1.25e-3" exactly.
/// Throws SchemaError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Rational make_rational(long numerator, long denominator = 1);

Integer factorial(unsigned n);

/// Exact integer power with a non-negative exponent.
Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

}  // namespace bellows
