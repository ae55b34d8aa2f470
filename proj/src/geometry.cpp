#include "ehrmini/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "ehrmini/errors.hpp"
#include "linalg.hpp"

namespace ehrmini {
namespace {

// Calls f(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t m = j; m < k; ++m) idx[m] = idx[m - 1] + 1;
  }
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
  return out;
}

// Facets of the hull of `pts`, which must be full-dimensional in R^d, d >= 1.
// Every d-subset of affinely independent points spans a hyperplane; it is a
// facet hyperplane iff all points lie weakly on one side.
std::vector<HalfSpace> enumerate_facets(const std::vector<IntVector>& pts, std::size_t d) {
  std::set<HalfSpace> found;
  for_each_combination(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    linalg::IntMatrix rows;
    rows.reserve(d - 1);
    for (std::size_t j = 1; j < d; ++j) rows.push_back(subtract(pts[idx[j]], pts[idx[0]]));
    IntVector normal = linalg::primitive(linalg::cofactor_normal(rows, d));
    if (std::all_of(normal.begin(), normal.end(), [](const Integer& x) { return sgn(x) == 0; })) {
      return;
    }
    Integer offset = dot(normal, pts[idx[0]]);
    bool above = false;
    bool below = false;
    for (const auto& p : pts) {
      const int s = cmp(dot(normal, p), offset);
      above |= s > 0;
      below |= s < 0;
      if (above && below) return;
    }
    if (above) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    found.insert(HalfSpace{std::move(normal), std::move(offset)});
  });
  return {found.begin(), found.end()};
}

// Indices of the extreme points of a full-dimensional point set: a point is
// a vertex iff the facet normals tight at it span R^d.
std::vector<std::size_t> extreme_indices(const std::vector<IntVector>& pts,
                                         const std::vector<HalfSpace>& facets, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    linalg::RatMatrix tight;
    for (const auto& h : facets) {
      if (dot(h.normal, pts[i]) == h.offset) tight.push_back(to_rational(h.normal));
    }
    if (tight.size() >= d && linalg::row_rank(std::move(tight), d).rank == d) out.push_back(i);
  }
  return out;
}

struct Triangulator {
  const std::vector<IntVector>& vertices;
  std::vector<std::vector<bool>> tight;  // tight[facet][vertex]
  std::size_t d;
  Integer det_sum = 0;

  std::vector<IntVector> points_of(const std::vector<std::size_t>& face) const {
    std::vector<IntVector> pts;
    pts.reserve(face.size());
    for (auto i : face) pts.push_back(vertices[i]);
    return pts;
  }

  // Cone from the lowest-index vertex of `face` (affine dimension j) over
  // every facet of `face` that misses it, recursively.
  void run(const std::vector<std::size_t>& face, std::size_t j, std::vector<std::size_t>& prefix) {
    if (j == 0) {
      prefix.push_back(face.front());
      linalg::IntMatrix m;
      m.reserve(d);
      for (std::size_t k = 1; k < prefix.size(); ++k) {
        m.push_back(subtract(vertices[prefix[k]], vertices[prefix[0]]));
      }
      det_sum += abs(linalg::determinant(std::move(m)));
      prefix.pop_back();
      return;
    }
    const std::size_t apex = face.front();
    prefix.push_back(apex);
    std::set<std::vector<std::size_t>> seen;
    for (const auto& on_facet : tight) {
      if (on_facet[apex]) continue;
      std::vector<std::size_t> sub;
      for (auto i : face) {
        if (on_facet[i]) sub.push_back(i);
      }
      if (sub.empty() || seen.count(sub)) continue;
      if (linalg::affine_rank(points_of(sub)).rank + 1 != j) continue;
      seen.insert(sub);
      run(sub, j - 1, prefix);
    }
    prefix.pop_back();
  }
};

Rational triangulated_volume(const std::vector<IntVector>& vertices,
                             const std::vector<HalfSpace>& facets, std::size_t d) {
  Triangulator t{vertices, {}, d};
  t.tight.reserve(facets.size());
  for (const auto& h : facets) {
    std::vector<bool> row(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) row[i] = dot(h.normal, vertices[i]) == h.offset;
    t.tight.push_back(std::move(row));
  }
  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> prefix;
  t.run(all, d, prefix);
  return make_rational(t.det_sum, factorial(d));
}

}  // namespace

bool HalfSpace::satisfied_by(const RatVector& x, bool strict) const {
  const Rational lhs = dot(normal, x);
  return strict ? lhs < offset : lhs <= offset;
}

LatticePolytope LatticePolytope::from_vertices(std::span<const IntVector> points) {
  if (points.empty()) throw ConstructionError("polytope needs at least one point");
  const std::size_t d = points.front().size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) {
      throw ConstructionError("point " + std::to_string(i) + " has " +
                              std::to_string(points[i].size()) + " coordinates, expected " +
                              std::to_string(d));
    }
  }
  std::vector<IntVector> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope p;
  p.ambient_dim_ = d;
  const auto rank = linalg::affine_rank(pts);
  p.dim_ = rank.rank;

  if (p.dim_ == 0) {
    p.vertices_ = {pts.front()};
    p.volume_ = d == 0 ? 1 : 0;
    return p;
  }

  if (p.dim_ == d) {
    p.halfspaces_ = enumerate_facets(pts, d);
    for (auto i : extreme_indices(pts, p.halfspaces_, d)) p.vertices_.push_back(pts[i]);
    p.volume_ = triangulated_volume(p.vertices_, p.halfspaces_, d);
    return p;
  }

  // Lower-dimensional: coordinate projection onto the pivot columns is an
  // affine bijection of the affine hull, so extremality can be decided there.
  const std::size_t k = p.dim_;
  std::vector<IntVector> projected;
  projected.reserve(pts.size());
  for (const auto& x : pts) {
    IntVector y;
    y.reserve(k);
    for (auto c : rank.pivot_columns) y.push_back(x[c]);
    projected.push_back(std::move(y));
  }
  const auto facets = enumerate_facets(projected, k);
  for (auto i : extreme_indices(projected, facets, k)) p.vertices_.push_back(pts[i]);
  p.volume_ = 0;
  return p;
}

LatticePolytope dilate(const LatticePolytope& p, const Integer& k) {
  if (sgn(k) < 0) throw DomainError("dilation factor must be nonnegative, got " + k.get_str());
  if (sgn(k) == 0) {
    return LatticePolytope::from_vertices({IntVector(p.ambient_dim(), Integer(0))});
  }
  LatticePolytope q = p;
  for (auto& v : q.vertices_) {
    for (auto& x : v) x *= k;
  }
  for (auto& h : q.halfspaces_) h.offset *= k;
  q.volume_ *= Rational(power(k, q.ambient_dim_));
  return q;
}

LatticePolytope translate(const LatticePolytope& p, const IntVector& a) {
  if (a.size() != p.ambient_dim()) {
    throw DomainError("translation vector has length " + std::to_string(a.size()) +
                      ", polytope lives in dimension " + std::to_string(p.ambient_dim()));
  }
  LatticePolytope q = p;
  for (auto& v : q.vertices_) {
    for (std::size_t j = 0; j < a.size(); ++j) v[j] += a[j];
  }
  for (auto& h : q.halfspaces_) h.offset += dot(h.normal, a);
  return q;
}

bool contains(const LatticePolytope& p, const RatVector& x, bool strict) {
  if (!p.is_full_dimensional()) {
    throw UnsupportedError("membership is defined only for full-dimensional polytopes (dim " +
                           std::to_string(p.dim()) + " in R^" + std::to_string(p.ambient_dim()) +
                           ")");
  }
  if (x.size() != p.ambient_dim()) {
    throw DomainError("point has length " + std::to_string(x.size()) + ", expected " +
                      std::to_string(p.ambient_dim()));
  }
  return std::all_of(p.halfspaces().begin(), p.halfspaces().end(),
                     [&](const HalfSpace& h) { return h.satisfied_by(x, strict); });
}

bool contains(const LatticePolytope& p, const IntVector& x, bool strict) {
  return contains(p, to_rational(x), strict);
}

LatticePolytope pyramid(const LatticePolytope& p) {
  std::vector<IntVector> pts;
  pts.reserve(p.vertices().size() + 1);
  for (const auto& v : p.vertices()) {
    IntVector lifted = v;
    lifted.emplace_back(0);
    pts.push_back(std::move(lifted));
  }
  IntVector apex(p.ambient_dim() + 1, Integer(0));
  apex.back() = 1;
  pts.push_back(std::move(apex));
  return LatticePolytope::from_vertices(pts);
}

}  // namespace ehrmini
