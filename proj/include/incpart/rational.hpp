#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace incpart {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Formats as "numerator/denominator" in lowest terms; integers keep the "/1".
std::string to_string(const Rational& value);

/// Parses "a/b" or "a" (optional leading '-'); the result is canonicalized.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Product of a rational power; exponent may be any non-negative integer.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace incpart
