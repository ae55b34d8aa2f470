#pragma once

// Test-only ground truth that never consults halfspaces: hull membership by
// Caratheodory (is x inside some affinely independent simplex spanned by the
// points?), shoelace areas and bounding-box scans.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ehrmini/numeric.hpp"

namespace ehrmini::testing {

// Solves the d x k system A y = b (columns of A given as `cols`) when it is
// consistent and the columns are independent.
inline std::optional<RatVector> solve_columns(const std::vector<RatVector>& cols, RatVector b) {
  const std::size_t k = cols.size();
  const std::size_t d = b.size();
  std::vector<RatVector> m(d, RatVector(k + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = cols[c][r];
    m[r][k] = b[r];
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < d && sgn(m[piv][c]) == 0) ++piv;
    if (piv == d) return std::nullopt;  // dependent columns
    std::swap(m[row], m[piv]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) m[r][cc] -= f * m[row][cc];
    }
    ++row;
  }
  for (std::size_t r = row; r < d; ++r) {
    if (sgn(m[r][k]) != 0) return std::nullopt;
  }
  RatVector y(k);
  for (std::size_t c = 0; c < k; ++c) y[c] = m[c][k] / m[c][c];
  return y;
}

// x in conv(points), decided over all subsets of at most d+1 points.
inline bool in_hull(const std::vector<IntVector>& points, const RatVector& x) {
  const std::size_t d = x.size();
  const std::size_t n = points.size();
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t start) -> bool {
    if (!chosen.empty()) {
      const auto& base = points[chosen[0]];
      std::vector<RatVector> cols;
      for (std::size_t k = 1; k < chosen.size(); ++k) {
        RatVector col(d);
        for (std::size_t j = 0; j < d; ++j) col[j] = points[chosen[k]][j] - base[j];
        cols.push_back(std::move(col));
      }
      RatVector rhs(d);
      for (std::size_t j = 0; j < d; ++j) rhs[j] = x[j] - base[j];
      if (auto y = solve_columns(cols, rhs)) {
        Rational total = 0;
        bool nonneg = true;
        for (const auto& c : *y) {
          nonneg &= sgn(c) >= 0;
          total += c;
        }
        if (nonneg && total <= 1) return true;
      }
    }
    if (chosen.size() == d + 1) return false;
    for (std::size_t i = start; i < n; ++i) {
      chosen.push_back(i);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(0);
}

inline std::vector<IntVector> scaled(const std::vector<IntVector>& points, long t) {
  auto out = points;
  for (auto& v : out) {
    for (auto& c : v) c *= t;
  }
  return out;
}

// #(t conv(points) ∩ Z^d) by scanning the bounding box with in_hull.
inline Integer count_by_hull(const std::vector<IntVector>& points, long t) {
  const auto pts = scaled(points, t);
  const std::size_t d = pts.front().size();
  IntVector lo = pts.front();
  IntVector hi = lo;
  for (const auto& v : pts) {
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  Integer count = 0;
  IntVector x = lo;
  while (true) {
    if (in_hull(pts, to_rational(x))) ++count;
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
      if (j == 0) return count;
    }
    if (d == 0) return count;
  }
}

// Twice the signed area of a polygon given in boundary order.
inline Rational shoelace_area(const std::vector<IntVector>& ring) {
  Integer twice = 0;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const auto& a = ring[k];
    const auto& b = ring[(k + 1) % ring.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return make_rational(abs(twice), 2);
}

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace ehrmini::testing
