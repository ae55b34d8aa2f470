#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ehrmini {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// num/den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
inline Integer to_integer(std::uint64_t n) { return Integer(static_cast<unsigned long>(n)); }

Integer factorial(std::uint64_t n);
Integer binomial(std::uint64_t n, std::uint64_t k);
Integer power(const Integer& base, std::uint64_t exponent);
Rational power(const Rational& base, std::uint64_t exponent);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Fixed-point rendering rounded half away from zero, e.g. to_decimal(1/3, 4)
// gives "0.3333". Presentation only.
std::string to_decimal(const Rational& q, unsigned fraction_digits);

bool is_integer(const Rational& q);

RatVector to_rational(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

std::string to_string(const IntVector& v);

}  // namespace ehrmini
