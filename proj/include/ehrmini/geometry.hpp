#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "ehrmini/numeric.hpp"

namespace ehrmini {

/// Closed half-space normal . x <= offset with a primitive integer normal.
struct HalfSpace {
  IntVector normal;
  Integer offset;

  bool satisfied_by(const RatVector& x, bool strict) const;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Convex lattice polytope given by its vertices.
///
/// Built only through from_vertices() and the transformations below, so the
/// following always hold: vertices are exactly the extreme points of the hull,
/// sorted lexicographically; halfspaces are the facets (present iff the
/// polytope is full-dimensional, sorted by normal); volume is the exact
/// d-dimensional volume, zero unless dim() == ambient_dim().
///
/// A point in R^0 counts as full-dimensional with volume 1.
class LatticePolytope {
 public:
  /// Convex hull of a nonempty set of integer points of common length.
  /// Non-extreme points are dropped. Throws ConstructionError.
  static LatticePolytope from_vertices(std::span<const IntVector> points);
  static LatticePolytope from_vertices(std::initializer_list<IntVector> points) {
    return from_vertices(std::span<const IntVector>(points.begin(), points.size()));
  }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_full_dimensional() const noexcept { return dim_ == ambient_dim_; }
  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
  const std::vector<HalfSpace>& halfspaces() const noexcept { return halfspaces_; }
  const Rational& volume() const noexcept { return volume_; }

  // Structural equality; canonical ordering makes this geometric equality.
  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope() = default;

  friend LatticePolytope dilate(const LatticePolytope&, const Integer&);
  friend LatticePolytope translate(const LatticePolytope&, const IntVector&);

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<HalfSpace> halfspaces_;
  Rational volume_;
};

/// kP for k >= 0. k = 0 collapses to the origin. Throws DomainError for k < 0.
LatticePolytope dilate(const LatticePolytope& p, const Integer& k);

/// P + a. Throws DomainError on a length mismatch.
LatticePolytope translate(const LatticePolytope& p, const IntVector& a);

/// Membership of a rational point; strict tests the interior. Requires a
/// full-dimensional polytope (UnsupportedError otherwise).
bool contains(const LatticePolytope& p, const RatVector& x, bool strict = false);
bool contains(const LatticePolytope& p, const IntVector& x, bool strict = false);

inline const Rational& volume(const LatticePolytope& p) { return p.volume(); }

/// Pyramid over P with apex e_{d+1}: hull of {(v, 0)} and (0, ..., 0, 1).
LatticePolytope pyramid(const LatticePolytope& p);

}  // namespace ehrmini
