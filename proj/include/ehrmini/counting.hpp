#pragma once

#include <cstdint>
#include <utility>

#include "ehrmini/geometry.hpp"

namespace ehrmini {

struct LatticeCount {
  std::uint64_t dilate = 0;
  Integer closed_count;
  Integer interior_count;
};

struct CountOptions {
  // Number of slabs counted concurrently. 1 runs the sequential scan; any
  // value yields the same count.
  unsigned threads = 1;
};

/// Componentwise (min, max) over the vertices.
std::pair<IntVector, IntVector> bounding_box(const LatticePolytope& p);

/// #(tP ∩ Z^d), or #(tP° ∩ Z^d) when interior is set.
///
/// P must be full-dimensional or a single point. Scans the integer bounding
/// box of tP row by row along the last axis; each row's lattice segment is
/// cut out directly from the halfspaces.
Integer count_points(const LatticePolytope& p, std::uint64_t t, bool interior = false,
                     CountOptions options = {});

LatticeCount lattice_count(const LatticePolytope& p, std::uint64_t t, CountOptions options = {});

}  // namespace ehrmini
