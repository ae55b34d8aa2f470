#include "ehrmini/oracle.hpp"

#include <random>

#include <gtest/gtest.h>

#include "ehrmini/corpus.hpp"
#include "ehrmini/counting.hpp"
#include "ehrmini/errors.hpp"
#include "ehrmini/miniatures.hpp"
#include "support/brute_force.hpp"

namespace ehrmini::oracle {
namespace {

using testing::iv;
using testing::q;

const LatticePolytope kSegment = box({1});
const LatticePolytope kTriangle = standard_simplex(2);
const LatticePolytope kSquare = unit_cube(2);

TEST(EnumerateCopies, SegmentWitnesses) {
  const std::vector<CopyWitness> expected{{1, iv({0})}, {1, iv({1})}, {2, iv({0})}};
  EXPECT_EQ(enumerate_copies(kSegment, 2), expected);
}

TEST(EnumerateCopies, TriangleTotal) { EXPECT_EQ(enumerate_copies(kTriangle, 4).size(), 20u); }

TEST(EnumerateCopies, HistogramIsShiftedEhrhart) {
  for (const auto& [name, p] : builtin_corpus()) {
    const std::uint64_t n_max = p.ambient_dim() >= 3 ? 3 : 5;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const auto hist = scale_histogram(enumerate_copies(p, n), n);
      for (std::uint64_t i = 1; i <= n; ++i) EXPECT_EQ(hist[i - 1], count_points(p, n - i)) << name << " n=" << n;
    }
  }
}

TEST(EnumerateCopies, NegativeCoordinates) {
  const auto p = translate(kTriangle, iv({-3, 5}));
  EXPECT_EQ(enumerate_copies(p, 4).size(), 20u);
}

TEST(EnumerateCopies, Guards) {
  EXPECT_EQ(max_dilate(1), 12u);
  EXPECT_EQ(max_dilate(3), 6u);
  EXPECT_EQ(max_dilate(4), 3u);
  EXPECT_THROW(enumerate_copies(kSquare, 13), ResourceError);
  EXPECT_THROW(enumerate_copies(unit_cube(3), 7), ResourceError);
  EXPECT_THROW(enumerate_copies(kSquare, 0), DomainError);
  EXPECT_THROW(enumerate_copies(LatticePolytope::from_vertices({{0, 0}, {1, 0}}), 2), UnsupportedError);
}

TEST(EnumerateCopies, RejectedPairsMissAVertex) {
  // Every candidate outside the witness list must push some vertex out of nP.
  const auto p = preset("pentagon").value();
  const std::uint64_t n = 4;
  const auto witnesses = enumerate_copies(p, n);
  const auto big = dilate(p, 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> scale(1, n);
  std::uniform_int_distribution<long> shift(-6, 12);
  int rejected = 0;
  while (rejected < 20) {
    const CopyWitness w{static_cast<std::uint64_t>(scale(rng)), iv({shift(rng), shift(rng)})};
    if (std::binary_search(witnesses.begin(), witnesses.end(), w)) continue;
    ++rejected;
    bool misses = false;
    for (const auto& v : p.vertices()) {
      IntVector x(2);
      for (std::size_t j = 0; j < 2; ++j) x[j] = to_integer(w.scale) * v[j] + w.shift[j];
      misses |= !testing::in_hull(big.vertices(), to_rational(x));
    }
    EXPECT_TRUE(misses);
  }
}

TEST(AverageVolume, Examples) {
  EXPECT_EQ(average_miniature_volume(kSegment, 2), q(2, 3));
  EXPECT_EQ(average_miniature_volume(kSquare, 1), 1);
}

TEST(AverageVolume, AgreesWithMuRatio) {
  for (const auto& [name, p] : builtin_corpus()) {
    const std::uint64_t n_max = p.ambient_dim() >= 3 ? 3 : 6;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      EXPECT_EQ(average_miniature_volume(p, n), mu_ratio(p, n)) << name << " n=" << n;
    }
  }
}

TEST(SumProduct, Cubic) {
  // sum_{i=1}^{n} i (n - i) = (n^3 - n) / 6
  const RationalPolynomial expected(std::vector<Rational>{q(0), q(-1, 6), q(0), q(1, 6)});
  EXPECT_EQ(sum_prod_poly(1, 1), expected);
}

TEST(SumProduct, LeadingCoefficients) {
  EXPECT_EQ(sum_prod_poly(1, 2).leading(), q(1, 12));
  for (unsigned p = 1; p <= 5; ++p) {
    for (unsigned r = 1; p + r <= 10; ++r) {
      const auto poly = sum_prod_poly(p, r);
      EXPECT_EQ(poly.degree(), static_cast<int>(p + r + 1));
      EXPECT_EQ(poly.leading(), beta_factorial(p, r));
    }
  }
}

TEST(SumProduct, IndexRangesAgree) {
  for (unsigned p = 1; p <= 4; ++p) {
    for (unsigned r = 1; r <= 4; ++r) {
      for (std::uint64_t n = 0; n <= 10; ++n) EXPECT_EQ(sum_prod_lower(p, r, n), sum_prod_upper(p, r, n));
    }
  }
  // With p = 0 the ranges differ by the i = 0 term n^q.
  EXPECT_EQ(sum_prod_lower(0, 2, 5) - sum_prod_upper(0, 2, 5), 25);
}

TEST(SumProduct, Guards) {
  EXPECT_THROW(sum_prod_poly(0, 2), DomainError);
  EXPECT_THROW(sum_prod_poly(2, 0), DomainError);
  EXPECT_THROW(sum_prod_poly(6, 5), DomainError);
}

TEST(BetaFactorial, Values) {
  EXPECT_EQ(beta_factorial(1, 1), q(1, 6));
  EXPECT_EQ(beta_factorial(2, 3), q(1, 60));
}

}  // namespace
}  // namespace ehrmini::oracle
