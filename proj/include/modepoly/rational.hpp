#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace modepoly {

// Exact rationals and integers. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;
using RationalVector = std::vector<Rational>;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "num/den", "num" and optional leading '-'. Throws InvalidInput.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);

// Exact value of a finite double (every finite double is a dyadic rational).
Rational rational_from_double(double value);

} // namespace modepoly
