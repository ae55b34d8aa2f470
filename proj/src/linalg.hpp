#pragma once

// Exact dense linear algebra over Z and Q used by the geometry code.

#include <cstddef>
#include <optional>
#include <vector>

#include "ehrmini/numeric.hpp"

namespace ehrmini::linalg {

using IntMatrix = std::vector<IntVector>;  // row-major
using RatMatrix = std::vector<RatVector>;

struct RankInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

// Rank of the row space together with the pivot columns of its echelon form.
// Rows may be empty (zero columns).
RankInfo row_rank(RatMatrix rows, std::size_t columns);

// Affine dimension of a point set (-1 encoded as rank 0 with empty input is
// not used; callers pass nonempty sets).
RankInfo affine_rank(const std::vector<IntVector>& points);

// Bareiss fraction-free determinant of a square integer matrix.
Integer determinant(IntMatrix m);

// Normal of the hyperplane spanned by d-1 difference vectors in R^d: the
// vector of signed maximal minors. Zero iff the rows are dependent.
IntVector cofactor_normal(const IntMatrix& rows, std::size_t d);

// Divides by the gcd of entries. Zero stays zero.
IntVector primitive(IntVector v, Integer* divisor = nullptr);

// Unique solution of a square system, or nullopt when singular.
std::optional<RatVector> solve(RatMatrix a, RatVector b);

}  // namespace ehrmini::linalg
