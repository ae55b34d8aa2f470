#include "ehrmini/polynomial.hpp"

#include <gtest/gtest.h>

#include "ehrmini/errors.hpp"
#include "support/brute_force.hpp"

namespace ehrmini {
namespace {

using testing::q;

RationalPolynomial poly(std::initializer_list<Rational> c) { return RationalPolynomial(std::vector<Rational>(c)); }

TEST(RationalPolynomial, CanonicalForm) {
  const auto p = poly({q(1), q(2), q(0), q(0)});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, poly({q(1), q(2)}));
  EXPECT_TRUE(poly({q(0)}).is_zero());
  EXPECT_EQ(RationalPolynomial().degree(), -1);
  EXPECT_EQ(RationalPolynomial().leading(), 0);
  EXPECT_EQ(p.coefficient(7), 0);
}

TEST(RationalPolynomial, Evaluate) {
  const auto square = poly({q(1), q(2), q(1)});
  EXPECT_EQ(square(q(3)), 16);
  EXPECT_EQ(square(q(0)), square.constant());
  // Standard triangle: L(-1) = 0 because t = 1 has no interior points.
  const auto triangle = poly({q(1), q(3, 2), q(1, 2)});
  EXPECT_EQ(triangle(q(-1)), 0);
  EXPECT_EQ(evaluate(triangle, q(1, 2)), q(15, 8));
}

TEST(RationalPolynomial, InterpolateRecoversCubic) {
  const auto target = poly({q(1), q(-1, 3), q(0), q(5, 7)});
  std::vector<Rational> xs{q(0), q(1), q(2), q(5)};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(target(x));
  EXPECT_EQ(RationalPolynomial::interpolate(xs, ys), target);
}

TEST(RationalPolynomial, InterpolateRejectsRepeatedNodes) {
  std::vector<Rational> xs{q(1), q(1)};
  std::vector<Rational> ys{q(0), q(2)};
  EXPECT_THROW(RationalPolynomial::interpolate(xs, ys), DomainError);
  std::vector<Rational> short_ys{q(0)};
  EXPECT_THROW(RationalPolynomial::interpolate(xs, short_ys), DomainError);
}

TEST(RationalPolynomial, ShiftMatchesEvaluation) {
  const auto p = poly({q(2), q(-1), q(3, 4), q(1, 6)});
  const auto shifted = p.shifted(q(-1));
  for (long t = -3; t <= 3; ++t) EXPECT_EQ(shifted(q(t)), p(q(t - 1)));
  // (t+1)^2 shifted by -1 is t^2.
  EXPECT_EQ(poly({q(1), q(2), q(1)}).shifted(q(-1)), poly({q(0), q(0), q(1)}));
}

TEST(RationalPolynomial, Arithmetic) {
  const auto a = poly({q(1), q(1)});
  const auto b = poly({q(-1), q(1)});
  EXPECT_EQ(a * b, poly({q(-1), q(0), q(1)}));
  EXPECT_EQ(a + b, poly({q(0), q(2)}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * q(1, 2), poly({q(1, 2), q(1, 2)}));
}

TEST(RationalPolynomial, HumanReadable) {
  EXPECT_EQ(poly({q(1), q(3, 2), q(1, 2)}).to_string(), "1/2 t^2 + 3/2 t + 1");
  EXPECT_EQ(poly({q(0), q(1, 3), q(1, 2), q(1, 6)}).to_string("n"), "1/6 n^3 + 1/2 n^2 + 1/3 n");
  EXPECT_EQ(poly({q(-1), q(0), q(1)}).to_string(), "t^2 - 1");
  EXPECT_EQ(poly({q(0), q(-1)}).to_string(), "-t");
  EXPECT_EQ(RationalPolynomial().to_string(), "0");
}

}  // namespace
}  // namespace ehrmini
