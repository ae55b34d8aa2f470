#include "ehrmini/ehrhart.hpp"

#include <vector>

#include "ehrmini/counting.hpp"
#include "ehrmini/errors.hpp"
#include "parallel.hpp"

namespace ehrmini {

EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) {
    throw UnsupportedError("Ehrhart interpolation needs a full-dimensional polytope");
  }
  const std::size_t d = p.ambient_dim();
  const std::size_t nodes = d + 3;  // d+1 interpolation nodes, 2 checks

  const auto counts = detail::generate(nodes, [&p](std::size_t t) { return count_points(p, t); });
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::size_t t = 0; t < nodes; ++t) {
    xs.emplace_back(static_cast<unsigned long>(t));
    ys.emplace_back(counts[t]);
  }

  auto poly = RationalPolynomial::interpolate(std::span(xs).first(d + 1), std::span(ys).first(d + 1));
  for (std::size_t t = d + 1; t < nodes; ++t) {
    if (poly(xs[t]) != ys[t]) {
      throw ConsistencyError("Ehrhart interpolant predicts " + to_string(poly(xs[t])) +
                             " lattice points at t = " + std::to_string(t) + " but counting found " +
                             to_string(ys[t]));
    }
  }
  return {std::move(poly), p};
}

bool check_reciprocity(const EhrhartPolynomial& ehrhart, std::uint64_t t_max) {
  const auto& p = ehrhart.source;
  const int sign = p.ambient_dim() % 2 == 0 ? 1 : -1;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    const Rational at_negative = ehrhart.poly(-Rational(static_cast<unsigned long>(t)));
    const Integer interior = count_points(p, t, /*interior=*/true);
    if (at_negative != sign * Rational(interior)) return false;
  }
  return true;
}

bool check_reciprocity(const LatticePolytope& p, std::uint64_t t_max) {
  return check_reciprocity(ehrhart_polynomial(p), t_max);
}

}  // namespace ehrmini
