#pragma once

#include <cstdint>

#include "ehrmini/geometry.hpp"
#include "ehrmini/polynomial.hpp"

namespace ehrmini {

/// L_P(t) together with the polytope it counts.
struct EhrhartPolynomial {
  RationalPolynomial poly;
  LatticePolytope source;

  Rational operator()(const Rational& t) const { return poly(t); }
};

/// Interpolates L_P from exact counts at t = 0..d and re-checks the result
/// against fresh counts at t = d+1 and d+2 (ConsistencyError on mismatch).
/// P must be full-dimensional (UnsupportedError otherwise).
EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p);

/// True iff L_P(-t) = (-1)^d * #(tP° ∩ Z^d) for t = 1..t_max.
bool check_reciprocity(const LatticePolytope& p, std::uint64_t t_max);
bool check_reciprocity(const EhrhartPolynomial& ehrhart, std::uint64_t t_max);

}  // namespace ehrmini
