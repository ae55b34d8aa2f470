#include "ehrmini/counting.hpp"

#include <algorithm>
#include <future>
#include <vector>

#include "ehrmini/errors.hpp"

namespace ehrmini {
namespace {

struct RowScanner {
  // Halfspaces of the dilate, already tightened by one for interior counts.
  std::vector<HalfSpace> halfspaces;
  IntVector lo;
  IntVector hi;
  std::size_t d;

  // Lattice points on the line through `prefix` parallel to the last axis.
  Integer row(const IntVector& prefix) const {
    const std::size_t last = d - 1;
    Integer row_lo = lo[last];
    Integer row_hi = hi[last];
    Integer slack;
    Integer bound;
    for (const auto& h : halfspaces) {
      slack = h.offset;
      for (std::size_t j = 0; j < last; ++j) slack -= h.normal[j] * prefix[j];
      const Integer& c = h.normal[last];
      const int s = sgn(c);
      if (s > 0) {
        mpz_fdiv_q(bound.get_mpz_t(), slack.get_mpz_t(), c.get_mpz_t());
        if (bound < row_hi) row_hi = bound;
      } else if (s < 0) {
        mpz_cdiv_q(bound.get_mpz_t(), slack.get_mpz_t(), c.get_mpz_t());
        if (bound > row_lo) row_lo = bound;
      } else if (sgn(slack) < 0) {
        return 0;
      }
      if (row_lo > row_hi) return 0;
    }
    return row_hi - row_lo + 1;
  }

  // Sum over prefixes with coordinate 0 in [first, last] and the remaining
  // leading coordinates over the box.
  Integer slab(const Integer& first, const Integer& last) const {
    if (d == 1) return row({});
    Integer total = 0;
    IntVector prefix(d - 1);
    prefix[0] = first;
    for (std::size_t j = 1; j + 1 < d; ++j) prefix[j] = lo[j];
    while (prefix[0] <= last) {
      total += row(prefix);
      // Odometer over coordinates d-2 .. 0.
      std::size_t j = d - 1;
      while (j-- > 0) {
        if (j == 0 || prefix[j] < hi[j]) {
          ++prefix[j];
          break;
        }
        prefix[j] = lo[j];
      }
    }
    return total;
  }
};

}  // namespace

std::pair<IntVector, IntVector> bounding_box(const LatticePolytope& p) {
  IntVector lo = p.vertices().front();
  IntVector hi = lo;
  for (const auto& v : p.vertices()) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }
  return {std::move(lo), std::move(hi)};
}

Integer count_points(const LatticePolytope& p, std::uint64_t t, bool interior, CountOptions options) {
  if (p.dim() == 0) {
    // A point is its own interior only in R^0.
    return (!interior || p.ambient_dim() == 0) ? 1 : 0;
  }
  if (!p.is_full_dimensional()) {
    throw UnsupportedError("lattice counting needs a full-dimensional polytope or a point");
  }
  const LatticePolytope dilated = dilate(p, Integer(t));
  if (t == 0) return interior ? 0 : 1;

  RowScanner scanner;
  scanner.d = p.ambient_dim();
  scanner.halfspaces = dilated.halfspaces();
  if (interior) {
    for (auto& h : scanner.halfspaces) h.offset -= 1;
  }
  auto [lo, hi] = bounding_box(dilated);
  scanner.lo = std::move(lo);
  scanner.hi = std::move(hi);

  if (scanner.d == 1 || options.threads <= 1) {
    return scanner.slab(scanner.lo[0], scanner.hi[0]);
  }

  // Disjoint slabs along axis 0, summed in slab order.
  const Integer width = scanner.hi[0] - scanner.lo[0] + 1;
  const Integer pieces = std::min<Integer>(Integer(options.threads), width);
  std::vector<std::future<Integer>> parts;
  Integer start = scanner.lo[0];
  for (Integer k = 0; k < pieces; ++k) {
    Integer stop = scanner.lo[0] + (width * (k + 1)) / pieces - 1;
    parts.push_back(std::async(std::launch::async,
                               [&scanner, start, stop] { return scanner.slab(start, stop); }));
    start = stop + 1;
  }
  Integer total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

LatticeCount lattice_count(const LatticePolytope& p, std::uint64_t t, CountOptions options) {
  return {t, count_points(p, t, false, options), count_points(p, t, true, options)};
}

}  // namespace ehrmini
