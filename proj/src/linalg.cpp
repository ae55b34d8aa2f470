#include "linalg.hpp"

#include <cassert>
#include <utility>

namespace ehrmini::linalg {

RankInfo row_rank(RatMatrix rows, std::size_t columns) {
  RankInfo info;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < columns; ++k) rows[i][k] -= f * rows[r][k];
    }
    info.pivot_columns.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

RankInfo affine_rank(const std::vector<IntVector>& points) {
  assert(!points.empty());
  const std::size_t d = points.front().size();
  RatMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  return row_rank(std::move(diffs), d);
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntVector cofactor_normal(const IntMatrix& rows, std::size_t d) {
  assert(rows.size() + 1 == d);
  IntVector normal(d);
  for (std::size_t skip = 0; skip < d; ++skip) {
    IntMatrix minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      IntVector r;
      r.reserve(d - 1);
      for (std::size_t j = 0; j < d; ++j) {
        if (j != skip) r.push_back(row[j]);
      }
      minor.push_back(std::move(r));
    }
    Integer det = determinant(std::move(minor));
    normal[skip] = (skip % 2 == 0) ? det : Integer(-det);
  }
  return normal;
}

IntVector primitive(IntVector v, Integer* divisor) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (sgn(g) != 0 && g != 1) {
    for (auto& x : v) x /= g;
  }
  if (divisor) *divisor = sgn(g) == 0 ? Integer(1) : g;
  return v;
}

std::optional<RatVector> solve(RatMatrix a, RatVector b) {
  const std::size_t n = a.size();
  assert(b.size() == n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace ehrmini::linalg
