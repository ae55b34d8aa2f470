#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ehrmini/geometry.hpp"

namespace ehrmini {

LatticePolytope unit_cube(std::size_t d);
LatticePolytope standard_simplex(std::size_t d);
// prod_j [0, lengths[j]]
LatticePolytope box(const std::vector<long>& lengths);
// hull of (0,0,0), (1,0,0), (0,1,0), (1,1,r)
LatticePolytope reeve_tetrahedron(long r);

struct NamedPolytope {
  std::string name;
  LatticePolytope polytope;
};

// segment, segment2, triangle, square, box21, pentagon, simplex3, cube3, reeve
std::vector<NamedPolytope> builtin_corpus();
std::vector<std::string> preset_names();
std::optional<LatticePolytope> preset(std::string_view name);

struct Decomposition {
  std::string name;
  std::vector<LatticePolytope> parts;
  LatticePolytope whole;  // the convex union
};

// diagonal-split: [0,1]^2 as two triangles; two-squares: [0,2]x[0,1] as two
// unit squares.
std::vector<Decomposition> builtin_decompositions();
std::optional<Decomposition> decomposition(std::string_view name);

}  // namespace ehrmini
