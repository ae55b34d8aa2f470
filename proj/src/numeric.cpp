#include "ehrmini/numeric.hpp"

#include <cassert>
#include <sstream>

namespace ehrmini {

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(std::uint64_t n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer power(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational power(const Rational& base, std::uint64_t exponent) {
  Rational result(power(base.get_num(), exponent), power(base.get_den(), exponent));
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_decimal(const Rational& q, unsigned fraction_digits) {
  const Integer scale = power(Integer(10), fraction_digits);
  Integer num = abs(q.get_num()) * scale;
  const Integer& den = q.get_den();
  // Round half away from zero: floor((2*num + den) / (2*den)).
  Integer scaled = (2 * num + den) / (2 * den);
  std::string digits = scaled.get_str();
  if (digits.size() <= fraction_digits) {
    digits.insert(0, fraction_digits + 1 - digits.size(), '0');
  }
  std::string out;
  if (sgn(q) < 0 && sgn(scaled) != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - fraction_digits);
  if (fraction_digits > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - fraction_digits);
  }
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  Integer s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) os << ',';
    os << v[j].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace ehrmini
