#pragma once

// Brute-force ground truth for the miniature formulas. Nothing here calls the
// counting or miniature code: copies are found by testing every candidate
// (scale, shift) pair with plain halfspace membership.

#include <compare>
#include <cstdint>
#include <vector>

#include "ehrmini/geometry.hpp"
#include "ehrmini/polynomial.hpp"

namespace ehrmini::oracle {

/// The lattice copy scale * P + shift.
struct CopyWitness {
  std::uint64_t scale = 1;
  IntVector shift;

  friend auto operator<=>(const CopyWitness&, const CopyWitness&) = default;
};

/// Largest n enumerate_copies accepts in ambient dimension d.
std::uint64_t max_dilate(std::size_t d);

/// Every (i, a) with 1 <= i <= n and iP + a ⊆ nP, sorted by (i, a).
/// Throws ResourceError above max_dilate.
std::vector<CopyWitness> enumerate_copies(const LatticePolytope& p, std::uint64_t n);

/// Witness counts per scale: result[i-1] counts witnesses with scale i.
std::vector<Integer> scale_histogram(const std::vector<CopyWitness>& witnesses, std::uint64_t n);

/// Mean of (i/n)^d vol(P) over all witnesses.
Rational average_miniature_volume(const LatticePolytope& p, std::uint64_t n);

/// sum_{i=0}^{n-1} i^p (n-i)^q and sum_{i=1}^{n} i^p (n-i)^q by direct summation.
Integer sum_prod_lower(unsigned p, unsigned q, std::uint64_t n);
Integer sum_prod_upper(unsigned p, unsigned q, std::uint64_t n);

/// The polynomial in n equal to sum_{i=1}^{n} i^p (n-i)^q. Requires p, q >= 1
/// and p + q <= 10 (DomainError). Throws TheoremViolation unless its leading
/// coefficient is p! q! / (p+q+1)!.
RationalPolynomial sum_prod_poly(unsigned p, unsigned q);

/// p! q! / (p+q+1)!.
Rational beta_factorial(unsigned p, unsigned q);

}  // namespace ehrmini::oracle
