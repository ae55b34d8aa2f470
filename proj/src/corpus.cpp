#include "ehrmini/corpus.hpp"

#include <algorithm>

namespace ehrmini {

LatticePolytope unit_cube(std::size_t d) { return box(std::vector<long>(d, 1)); }

LatticePolytope standard_simplex(std::size_t d) {
  std::vector<IntVector> pts(d + 1, IntVector(d, Integer(0)));
  for (std::size_t j = 0; j < d; ++j) pts[j + 1][j] = 1;
  return LatticePolytope::from_vertices(pts);
}

LatticePolytope box(const std::vector<long>& lengths) {
  const std::size_t d = lengths.size();
  std::vector<IntVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    IntVector v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = (mask >> j & 1) ? lengths[j] : 0;
    pts.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(pts);
}

LatticePolytope reeve_tetrahedron(long r) {
  return LatticePolytope::from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, Integer(r)}});
}

std::vector<NamedPolytope> builtin_corpus() {
  return {
      {"segment", box({1})},
      {"segment2", box({2})},
      {"triangle", standard_simplex(2)},
      {"square", unit_cube(2)},
      {"box21", box({2, 1})},
      {"pentagon", LatticePolytope::from_vertices({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {3, 1}})},
      {"simplex3", standard_simplex(3)},
      {"cube3", unit_cube(3)},
      {"reeve", reeve_tetrahedron(2)},
  };
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& entry : builtin_corpus()) names.push_back(entry.name);
  return names;
}

std::optional<LatticePolytope> preset(std::string_view name) {
  for (auto& entry : builtin_corpus()) {
    if (entry.name == name) return std::move(entry.polytope);
  }
  return std::nullopt;
}

std::vector<Decomposition> builtin_decompositions() {
  return {
      {"diagonal-split",
       {standard_simplex(2), LatticePolytope::from_vertices({{1, 0}, {0, 1}, {1, 1}})},
       unit_cube(2)},
      {"two-squares",
       {unit_cube(2), LatticePolytope::from_vertices({{1, 0}, {2, 0}, {1, 1}, {2, 1}})},
       box({2, 1})},
  };
}

std::optional<Decomposition> decomposition(std::string_view name) {
  for (auto& entry : builtin_decompositions()) {
    if (entry.name == name) return std::move(entry);
  }
  return std::nullopt;
}

}  // namespace ehrmini
