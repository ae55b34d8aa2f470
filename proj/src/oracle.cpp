#include "ehrmini/oracle.hpp"

#include <algorithm>
#include <string>

#include "ehrmini/errors.hpp"

namespace ehrmini::oracle {
namespace {

bool copy_fits(const LatticePolytope& big, const LatticePolytope& p, std::uint64_t i, const IntVector& a) {
  const Integer scale = to_integer(i);
  IntVector x(a.size());
  for (const auto& v : p.vertices()) {
    for (std::size_t j = 0; j < a.size(); ++j) x[j] = scale * v[j] + a[j];
    if (!contains(big, x)) return false;
  }
  return true;
}

// Odometer step through the integer box [lo, hi]; false once exhausted.
bool advance(IntVector& a, const IntVector& lo, const IntVector& hi) {
  for (std::size_t j = a.size(); j-- > 0;) {
    if (a[j] < hi[j]) {
      ++a[j];
      return true;
    }
    a[j] = lo[j];
  }
  return false;
}

}  // namespace

std::uint64_t max_dilate(std::size_t d) {
  if (d <= 2) return 12;
  if (d == 3) return 6;
  return 3;
}

std::vector<CopyWitness> enumerate_copies(const LatticePolytope& p, std::uint64_t n) {
  const std::size_t d = p.ambient_dim();
  if (n < 1) throw DomainError("dilate must be positive");
  if (n > max_dilate(d)) {
    throw ResourceError("brute-force enumeration is capped at n = " + std::to_string(max_dilate(d)) +
                        " in dimension " + std::to_string(d) + ", got n = " + std::to_string(n));
  }
  if (!p.is_full_dimensional()) {
    throw UnsupportedError("copy enumeration needs a full-dimensional polytope");
  }
  const LatticePolytope big = dilate(p, to_integer(n));

  IntVector vmin = p.vertices().front();
  IntVector vmax = vmin;
  for (const auto& v : p.vertices()) {
    for (std::size_t j = 0; j < d; ++j) {
      vmin[j] = std::min(vmin[j], v[j]);
      vmax[j] = std::max(vmax[j], v[j]);
    }
  }

  std::vector<CopyWitness> out;
  const Integer nn = to_integer(n);
  for (std::uint64_t i = 1; i <= n; ++i) {
    const Integer ii = to_integer(i);
    // Any feasible shift keeps i*min + a >= n*min and i*max + a <= n*max.
    IntVector lo(d);
    IntVector hi(d);
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = nn * vmin[j] - ii * vmax[j];
      hi[j] = nn * vmax[j] - ii * vmin[j];
    }
    IntVector a = lo;
    do {
      if (copy_fits(big, p, i, a)) out.push_back({i, a});
    } while (advance(a, lo, hi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> scale_histogram(const std::vector<CopyWitness>& witnesses, std::uint64_t n) {
  std::vector<Integer> hist(n, Integer(0));
  for (const auto& w : witnesses) hist.at(w.scale - 1) += 1;
  return hist;
}

Rational average_miniature_volume(const LatticePolytope& p, std::uint64_t n) {
  const auto witnesses = enumerate_copies(p, n);
  const std::size_t d = p.ambient_dim();
  const Rational step(Integer(1), to_integer(n));
  Rational sum = 0;
  for (const auto& w : witnesses) {
    sum += power(Rational(to_integer(w.scale)) * step, d) * p.volume();
  }
  return sum / Rational(to_integer(witnesses.size()));
}

Integer sum_prod_lower(unsigned p, unsigned q, std::uint64_t n) {
  Integer s = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    s += power(to_integer(i), p) * power(to_integer(n - i), q);
  }
  return s;
}

Integer sum_prod_upper(unsigned p, unsigned q, std::uint64_t n) {
  Integer s = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    s += power(to_integer(i), p) * power(to_integer(n - i), q);
  }
  return s;
}

Rational beta_factorial(unsigned p, unsigned q) {
  return make_rational(factorial(p) * factorial(q), factorial(p + q + 1));
}

RationalPolynomial sum_prod_poly(unsigned p, unsigned q) {
  if (p < 1 || q < 1 || p + q > 10) {
    throw DomainError("sum_prod_poly needs p, q >= 1 and p + q <= 10");
  }
  const unsigned degree = p + q + 1;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (unsigned n = 0; n <= degree + 1; ++n) {
    xs.emplace_back(n);
    ys.emplace_back(sum_prod_upper(p, q, n));
  }
  auto poly = RationalPolynomial::interpolate(std::span(xs).first(degree + 1), std::span(ys).first(degree + 1));
  if (poly(xs.back()) != ys.back()) {
    throw ConsistencyError("sum-product interpolant fails its check node");
  }
  if (poly.leading() != beta_factorial(p, q) || poly.degree() != static_cast<int>(degree)) {
    throw TheoremViolation("sum of i^" + std::to_string(p) + "(n-i)^" + std::to_string(q) + " has leading term " +
                           to_string(poly.leading()) + " n^" + std::to_string(poly.degree()) + ", expected " +
                           to_string(beta_factorial(p, q)));
  }
  return poly;
}

}  // namespace ehrmini::oracle
