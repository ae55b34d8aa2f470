#include "ehrmini/miniatures.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ehrmini/counting.hpp"
#include "ehrmini/ehrhart.hpp"
#include "ehrmini/errors.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

namespace ehrmini {
namespace {

constexpr std::size_t kMaxInclusionExclusionParts = 16;

Rational as_rational(std::uint64_t n) { return Rational(to_integer(n)); }

// L_P(0), ..., L_P(count - 1).
std::vector<Integer> ehrhart_values(const LatticePolytope& p, std::size_t count) {
  return detail::generate(count, [&p](std::size_t t) { return count_points(p, t); });
}

std::string subset_label(const std::vector<std::size_t>& subset) {
  std::string s = "{";
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(subset[k] + 1);
  }
  return s + "}";
}

}  // namespace

Integer copies_with_scale(const LatticePolytope& p, std::uint64_t n, std::uint64_t i) {
  if (i < 1 || i > n) {
    throw DomainError("scale factor " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  if (!p.is_full_dimensional()) {
    throw UnsupportedError("copy counting needs a full-dimensional polytope");
  }
  return count_points(p, n - i);
}

CopyCensus copy_census(const LatticePolytope& p, std::uint64_t n) {
  if (n < 1) throw DomainError("census dilate must be positive");
  if (!p.is_full_dimensional()) {
    throw UnsupportedError("copy counting needs a full-dimensional polytope");
  }
  const std::size_t d = p.ambient_dim();
  CopyCensus census;
  census.dilate = n;
  census.per_scale = detail::generate(n, [&](std::size_t k) { return copies_with_scale(p, n, k + 1); });
  census.total = 0;
  Integer weighted = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const Integer& c = census.per_scale[i - 1];
    census.total += c;
    weighted += power(to_integer(i), d) * c;
  }
  census.volume_sum = p.volume() * Rational(weighted) / Rational(power(to_integer(n), d));
  return census;
}

RationalPolynomial copy_polynomial(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) {
    throw UnsupportedError("copy polynomial needs a full-dimensional polytope");
  }
  RationalPolynomial h = ehrhart_polynomial(pyramid(p)).poly.shifted(Rational(-1));
  const std::size_t d = p.ambient_dim();
  const auto values = ehrhart_values(p, d + 3);
  Integer running = 0;
  for (std::uint64_t t = 1; t <= d + 3; ++t) {
    running += values[t - 1];  // H_P(t) = L_P(0) + ... + L_P(t-1)
    if (h(as_rational(t)) != running) {
      throw ConsistencyError("copy polynomial gives " + to_string(h(as_rational(t))) + " at t = " +
                             std::to_string(t) + " but the census total is " + running.get_str());
    }
  }
  return h;
}

Rational mu_ratio(const LatticePolytope& p, std::uint64_t n) {
  if (!p.is_full_dimensional()) return 0;
  const auto census = copy_census(p, n);
  return census.volume_sum / Rational(census.total);
}

RationalPolynomial miniature_volume_numerator(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) return {};
  const std::size_t d = p.ambient_dim();
  const std::size_t fit = 2 * d + 2;   // nodes n = 0 .. 2d+1
  const std::size_t nodes = fit + 2;   // plus two checks
  const auto values = ehrhart_values(p, nodes - 1);

  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::size_t n = 0; n < nodes; ++n) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += power(to_integer(n - i), d) * values[i];
    xs.push_back(as_rational(n));
    ys.push_back(p.volume() * Rational(s));
  }
  auto w = RationalPolynomial::interpolate(std::span(xs).first(fit), std::span(ys).first(fit));
  for (std::size_t n = fit; n < nodes; ++n) {
    if (w(xs[n]) != ys[n]) {
      throw ConsistencyError("miniature volume numerator fails its check at n = " + std::to_string(n));
    }
  }
  return w;
}

Rational mu_closed_form(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  return p.volume() / Rational(binomial(2 * d + 1, d));
}

Rational mu_limit_symbolic(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) return 0;
  const auto numerator = miniature_volume_numerator(p);
  const auto copies = copy_polynomial(p);
  const std::size_t d = p.ambient_dim();
  if (numerator.degree() != static_cast<int>(2 * d + 1) || copies.degree() != static_cast<int>(d + 1)) {
    throw TheoremViolation("unexpected degrees: numerator " + std::to_string(numerator.degree()) +
                           ", copy count " + std::to_string(copies.degree()));
  }
  const Rational limit = numerator.leading() / copies.leading();
  const Rational expected = mu_closed_form(p);
  if (limit != expected) {
    throw TheoremViolation("mean miniature volume tends to " + to_string(limit) + ", expected vol/C(2d+1,d) = " +
                           to_string(expected));
  }
  return limit;
}

MuReport mu_report(const LatticePolytope& p, std::uint64_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be positive");
  MuReport report;
  if (!p.is_full_dimensional()) {
    for (std::uint64_t n = 1; n <= n_max; ++n) report.ratios.emplace_back(n, Rational(0));
    report.symbolic_limit = 0;
    report.closed_form = 0;
    report.convergence_constant = 0;
    return report;
  }
  const std::size_t d = p.ambient_dim();
  report.symbolic_limit = mu_limit_symbolic(p);
  report.closed_form = mu_closed_form(p);

  const auto values = ehrhart_values(p, n_max);
  std::vector<Rational> errors;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    Integer copies = 0;
    Integer weighted = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      copies += values[i];
      weighted += power(to_integer(n - i), d) * values[i];
    }
    const Rational ratio = p.volume() * Rational(weighted) /
                           Rational(power(to_integer(n), d) * copies);
    const Rational err = abs(ratio - report.closed_form);
    const Rational scaled = err * as_rational(n);
    if (scaled > report.convergence_constant) report.convergence_constant = scaled;
    errors.push_back(err);
    report.ratios.emplace_back(n, ratio);
  }
  std::size_t k = errors.size() - 1;
  while (k > 0 && errors[k - 1] >= errors[k]) --k;
  report.burn_in = k + 1;
  return report;
}

std::optional<LatticePolytope> intersect(std::span<const LatticePolytope> parts) {
  if (parts.empty()) throw DomainError("intersection of no polytopes");
  const std::size_t d = parts.front().ambient_dim();
  std::set<HalfSpace> unique;
  for (const auto& part : parts) {
    if (part.ambient_dim() != d) throw DomainError("parts live in different ambient dimensions");
    if (!part.is_full_dimensional()) {
      throw UnsupportedError("halfspace intersection needs full-dimensional parts");
    }
    unique.insert(part.halfspaces().begin(), part.halfspaces().end());
  }
  if (d == 0) return parts.front();
  const std::vector<HalfSpace> hs(unique.begin(), unique.end());

  std::set<RatVector> found;
  std::vector<std::size_t> idx(d);
  for (std::size_t j = 0; j < d; ++j) idx[j] = j;
  if (hs.size() < d) return std::nullopt;
  while (true) {
    linalg::RatMatrix a;
    RatVector b;
    for (auto k : idx) {
      a.push_back(to_rational(hs[k].normal));
      b.emplace_back(hs[k].offset);
    }
    if (auto x = linalg::solve(std::move(a), std::move(b))) {
      if (std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return h.satisfied_by(*x, false); })) {
        found.insert(std::move(*x));
      }
    }
    std::size_t j = d;
    while (j > 0 && idx[j - 1] == hs.size() - d + j - 1) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t m = j; m < d; ++m) idx[m] = idx[m - 1] + 1;
  }
  if (found.empty()) return std::nullopt;

  std::vector<IntVector> vertices;
  for (const auto& x : found) {
    IntVector v;
    for (const auto& c : x) {
      if (!is_integer(c)) {
        std::string coords = "(";
        for (std::size_t j = 0; j < x.size(); ++j) coords += (j ? "," : "") + to_string(x[j]);
        throw UnsupportedError("intersection has non-lattice vertex " + coords + ")");
      }
      v.push_back(c.get_num());
    }
    vertices.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(vertices);
}

InclusionExclusionReport inclusion_exclusion_report(std::span<const LatticePolytope> parts) {
  if (parts.empty()) throw DomainError("inclusion-exclusion needs at least one part");
  if (parts.size() > kMaxInclusionExclusionParts) {
    throw ResourceError("inclusion-exclusion is capped at " + std::to_string(kMaxInclusionExclusionParts) +
                        " parts");
  }
  const std::size_t d = parts.front().ambient_dim();
  for (const auto& part : parts) {
    if (part.ambient_dim() != d) throw DomainError("parts live in different ambient dimensions");
  }

  InclusionExclusionReport report;
  report.mu = 0;
  report.volume = 0;
  const std::size_t r = parts.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    InclusionExclusionTerm term;
    std::vector<LatticePolytope> chosen;
    bool degenerate = false;
    for (std::size_t k = 0; k < r; ++k) {
      if (!(mask >> k & 1)) continue;
      term.subset.push_back(k);
      chosen.push_back(parts[k]);
      degenerate |= !parts[k].is_full_dimensional();
    }
    term.sign = term.subset.size() % 2 == 1 ? 1 : -1;
    term.volume = 0;
    term.mu = 0;
    if (degenerate) {
      // Contained in a part of volume zero.
      term.dim = std::min_element(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) {
                   return a.dim() < b.dim();
                 })->dim();
    } else {
      std::optional<LatticePolytope> common;
      try {
        common = intersect(chosen);
      } catch (const UnsupportedError& e) {
        throw UnsupportedError("intersection of parts " + subset_label(term.subset) + ": " + e.what());
      }
      if (!common) {
        term.empty = true;
      } else {
        term.dim = common->dim();
        term.volume = common->volume();
        term.mu = mu_limit_symbolic(*common);
      }
    }
    report.mu += term.sign * term.mu;
    report.volume += term.sign * term.volume;
    report.terms.push_back(std::move(term));
  }

  std::vector<IntVector> all;
  for (const auto& part : parts) all.insert(all.end(), part.vertices().begin(), part.vertices().end());
  const auto hull = LatticePolytope::from_vertices(all);
  report.hull_volume = hull.volume();
  report.hull_mu = mu_limit_symbolic(hull);
  report.union_consistent = report.hull_volume == report.volume;
  if (report.union_consistent && report.hull_mu != report.mu) {
    throw TheoremViolation("inclusion-exclusion gives mu = " + to_string(report.mu) + " but the union has mu = " +
                           to_string(report.hull_mu));
  }
  return report;
}

Rational mu_inclusion_exclusion(std::span<const LatticePolytope> parts) {
  return inclusion_exclusion_report(parts).mu;
}

}  // namespace ehrmini
