#include "ehrmini/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ehrmini/errors.hpp"

namespace ehrmini {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::interpolate(std::span<const Rational> xs,
                                                   std::span<const Rational> ys) {
  if (xs.size() != ys.size()) {
    throw DomainError("interpolate: node and value counts differ");
  }
  const std::size_t m = xs.size();
  std::vector<Rational> acc(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    // basis_j(t) = prod_{k != j} (t - x_k) / (x_j - x_k)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      if (xs[j] == xs[k]) throw DomainError("interpolate: repeated node " + ehrmini::to_string(xs[j]));
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t e = 0; e < basis.size(); ++e) {
        next[e + 1] += basis[e];
        next[e] -= basis[e] * xs[k];
      }
      basis = std::move(next);
      denom *= xs[j] - xs[k];
    }
    const Rational scale = ys[j] / denom;
    for (std::size_t e = 0; e < basis.size(); ++e) acc[e] += basis[e] * scale;
  }
  return RationalPolynomial(std::move(acc));
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational RationalPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& h) const {
  // Horner over polynomials: q = (...((c_n)(t+h) + c_{n-1})(t+h) + ...).
  std::vector<Rational> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t e = 0; e < acc.size(); ++e) {
      next[e + 1] += acc[e];
      next[e] += acc[e] * h;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return RationalPolynomial(std::move(acc));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << mag.get_str();
    if (k >= 1) {
      if (!unit) os << ' ';
      os << var;
      if (k >= 2) os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace ehrmini
