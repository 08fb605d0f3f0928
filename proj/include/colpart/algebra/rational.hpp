#pragma once

#include <gmpxx.h>

#include <string>

namespace colpart {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds a canonical rational num/den. Throws DivisionByZero on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Exact "num/den" rendering (den always printed).
std::string to_fraction_string(const BigRational& q);

/// Parses "a", "-a" or "a/b" into a canonical rational.
BigRational parse_fraction(const std::string& text);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal_string(const BigRational& q, unsigned digits);

BigInt pow_int(const BigInt& base, unsigned long exponent);
BigRational pow_rational(const BigRational& base, long exponent);

}  // namespace colpart
