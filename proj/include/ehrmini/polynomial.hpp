#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehrmini/numeric.hpp"

namespace ehrmini {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient k multiplies t^k. The representation is canonical: trailing
/// zeros are stripped on construction, so two polynomials are equal iff their
/// coefficient vectors are equal. The zero polynomial has no coefficients and
/// degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  /// Unique polynomial of degree < xs.size() through (xs[j], ys[j]), built in
  /// Lagrange form. Nodes must be pairwise distinct.
  static RationalPolynomial interpolate(std::span<const Rational> xs,
                                        std::span<const Rational> ys);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Zero past the degree.
  Rational coefficient(std::size_t k) const;
  Rational leading() const;
  Rational constant() const { return coefficient(0); }

  // Horner.
  Rational evaluate(const Rational& t) const;
  Rational operator()(const Rational& t) const { return evaluate(t); }

  /// q(t) = p(t + h).
  RationalPolynomial shifted(const Rational& h) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& scalar);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable, highest degree first: "1/2 t^2 + 3/2 t + 1".
  std::string to_string(std::string_view var = "t") const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

inline Rational evaluate(const RationalPolynomial& p, const Rational& t) { return p.evaluate(t); }

}  // namespace ehrmini
