#pragma once

// Horizontal lattice copies and the average volume of horizontal miniatures.
//
// A horizontal miniature M of P with resolution n is identified with its
// lattice copy iP + a inside nP through M = (iP + a) / n, so
// vol(M) = (i/n)^d vol(P) and every count stays integral.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ehrmini/geometry.hpp"
#include "ehrmini/polynomial.hpp"

namespace ehrmini {

struct CopyCensus {
  std::uint64_t dilate = 0;           // n
  std::vector<Integer> per_scale;     // per_scale[i-1]: copies iP + a in nP
  Integer total;                      // H_P(n)
  Rational volume_sum;                // sum of vol(M) over resolution-n miniatures

  const Integer& at_scale(std::uint64_t i) const { return per_scale.at(i - 1); }
};

struct MuReport {
  std::vector<std::pair<std::uint64_t, Rational>> ratios;  // (n, mean miniature volume)
  Rational symbolic_limit;
  Rational closed_form;  // vol(P) / C(2d+1, d)
  // Smallest C with |ratio(n) - closed_form| <= C / n over the reported range.
  Rational convergence_constant;
  // First n from which |ratio(n) - closed_form| is nonincreasing.
  std::uint64_t burn_in = 1;
};

/// Number of a in Z^d with iP + a ⊆ nP, which is L_P(n - i).
/// Requires 1 <= i <= n (DomainError) and a full-dimensional P.
Integer copies_with_scale(const LatticePolytope& p, std::uint64_t n, std::uint64_t i);

CopyCensus copy_census(const LatticePolytope& p, std::uint64_t n);

/// H_P(t) as a polynomial: L_Pyr(P)(t - 1). Cross-checked against census
/// totals at t = 1..d+3; ConsistencyError on disagreement.
RationalPolynomial copy_polynomial(const LatticePolytope& p);

/// Mean volume of the horizontal miniatures of resolution n. Zero when P is
/// not full-dimensional.
Rational mu_ratio(const LatticePolytope& p, std::uint64_t n);

/// n^d times the total miniature volume at resolution n, i.e.
/// vol(P) * sum_{i=0}^{n-1} (n-i)^d L_P(i), interpolated as a polynomial of
/// degree 2d+1 in n and re-checked at two further nodes.
RationalPolynomial miniature_volume_numerator(const LatticePolytope& p);

/// vol(P) / C(2d+1, d).
Rational mu_closed_form(const LatticePolytope& p);

/// Limit of mu_ratio as n grows, read off the leading coefficients of the
/// numerator and of H_P. Zero for lower-dimensional P. Throws
/// TheoremViolation if it differs from mu_closed_form.
Rational mu_limit_symbolic(const LatticePolytope& p);

MuReport mu_report(const LatticePolytope& p, std::uint64_t n_max);

/// Intersection of full-dimensional parts sharing an ambient dimension;
/// nullopt when empty. Vertices come from the halfspace arrangement, and a
/// non-integral vertex is rejected with UnsupportedError.
std::optional<LatticePolytope> intersect(std::span<const LatticePolytope> parts);

struct InclusionExclusionTerm {
  std::vector<std::size_t> subset;  // indices into the parts
  int sign = 1;
  bool empty = false;
  std::size_t dim = 0;
  Rational volume;
  Rational mu;
};

struct InclusionExclusionReport {
  std::vector<InclusionExclusionTerm> terms;
  Rational mu;                // alternating sum of mu over intersections
  Rational volume;            // same alternating sum for vol
  Rational hull_volume;       // vol(conv(union))
  Rational hull_mu;           // mu_limit_symbolic(conv(union))
  // vol(conv(union)) equals the inclusion-exclusion volume. When false the
  // union is certainly not convex.
  bool union_consistent = false;
};

/// Inclusion-exclusion sum of mu over all nonempty sub-intersections.
/// Parts that are not full-dimensional contribute only zero terms.
Rational mu_inclusion_exclusion(std::span<const LatticePolytope> parts);

/// As above, with the per-term breakdown and the convexity cross-check. If
/// the union passes the volume check but the mu values disagree, throws
/// TheoremViolation.
InclusionExclusionReport inclusion_exclusion_report(std::span<const LatticePolytope> parts);

}  // namespace ehrmini
