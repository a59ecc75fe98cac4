#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bertrand::exact {

/// Arbitrary-precision rational in canonical form (denominator > 0, reduced).
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Parses "a", "-a", "a/b" or a decimal literal. Decimal literals are read
/// exactly as written in base 10 ("0.2" -> 1/5).
BigRational parse_rational(std::string_view text);

/// Exact value of a binary64 number ("0.2" as a double is not 1/5).
BigRational rational_from_double(double value);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const BigRational& q);

bool is_canonical(const BigRational& q);

int sign(const BigRational& q);

BigRational pow(const BigRational& base, unsigned exponent);

/// Midpoint of [lo, hi].
BigRational midpoint(const BigRational& lo, const BigRational& hi);

}  // namespace bertrand::exact
