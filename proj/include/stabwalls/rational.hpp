#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stabwalls {

// Arbitrary precision rational, always canonical (lowest terms, positive
// denominator) once it leaves this module's helpers.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", integers and plain decimals ("0.25", "-1.5e-3" is not supported).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

int sign(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// Rounded decimal with `digits` fractional digits. Display only.
std::string to_decimal(const Rational& q, int digits);

// 10^-k as a rational.
Rational pow10_inv(int k);

}  // namespace stabwalls
