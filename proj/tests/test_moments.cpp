#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/moments.hpp"
#include "support.hpp"

using namespace dunkl;
using namespace dunkl::testing;

namespace {

// Trapezoid rule on [-12, 12]; the integrand is negligible outside.
double quadrature(unsigned a, unsigned kappa) {
  const int steps = 200000;
  const double lo = -12, hi = 12, h = (hi - lo) / steps;
  double sum = 0;
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + i * h;
    const double f = std::pow(x, a) * std::pow(std::abs(x), 2.0 * kappa) * std::exp(-x * x);
    sum += (i == 0 || i == steps) ? f / 2 : f;
  }
  return sum * h;
}

DunklContext z2(std::size_t m, RationalVector kappa) {
  return DunklContext(builtin_root_system(RootFamily::Z2, m, kappa));
}

}  // namespace

TEST(Moments, HalfIntegerGammaFollowsRecursion) {
  EXPECT_EQ(half_integer_gamma(0), 1);
  for (unsigned n = 0; n < 12; ++n)
    EXPECT_EQ(half_integer_gamma(n + 1), (Rational(n) + q(1, 2)) * half_integer_gamma(n));
}

TEST(Moments, Examples) {
  EXPECT_EQ(weighted_moment({2}, {q(0)}).coefficient, q(1, 2));
  EXPECT_EQ(weighted_moment({2}, {q(1)}).coefficient, q(3, 4));
  EXPECT_EQ(weighted_moment({0}, {q(1)}).coefficient, q(1, 2));
  EXPECT_EQ(weighted_moment({3, 2}, {q(1), q(0)}).coefficient, 0);
  EXPECT_EQ(weighted_moment({2, 4}, {q(0), q(2)}).dimension, 2u);
}

TEST(Moments, AgreeWithNumericalQuadrature) {
  for (unsigned a = 0; a <= 8; a += 2)
    for (unsigned kappa = 0; kappa <= 2; ++kappa) {
      const double exact = weighted_moment({a}, {Rational(kappa)}).coefficient.get_d() * std::sqrt(M_PI);
      EXPECT_NEAR(quadrature(a, kappa), exact, 1e-8 * exact) << "a=" << a << " kappa=" << kappa;
    }
}

TEST(Moments, RefusesNonIntegerMultiplicity) {
  EXPECT_THROW(weighted_moment({2}, {q(1, 2)}), PreconditionViolation);
  EXPECT_THROW(weighted_moment({2}, {q(-1)}), PreconditionViolation);
  EXPECT_THROW(z2_kappas(DunklContext(builtin_root_system(RootFamily::Z2, 2, {q(1, 2)}))),
               PreconditionViolation);
  EXPECT_THROW(z2_kappas(DunklContext(builtin_root_system(RootFamily::A, 3, {q(1)}))), InvalidInput);
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(c(2, 1), x(2, 0), {q(1), q(2)}).coefficient, 0);
  EXPECT_EQ(inner_product(c(1, 1), c(1, 1), {q(1)}).coefficient, q(1, 2));
  for (unsigned kappa = 0; kappa <= 3; ++kappa) {
    const auto ctx = z2(1, {Rational(kappa)});
    const auto ch2 = ch_recursion(ctx, 1, c(1, 1)).polynomial;
    EXPECT_EQ(inner_product(c(1, 1), ch2, {Rational(kappa)}).coefficient, 0);
  }
  const auto ctx = z2(2, {q(1), q(1)});
  const auto h2 = harmonic_basis(ctx, 2).elements;
  const auto ch2 = ch_recursion(ctx, 1, c(2, 1)).polynomial;
  for (const auto& h : h2) EXPECT_EQ(inner_product(h, ch2, {q(1), q(1)}).coefficient, 0);
}

TEST(Orthogonality, ReportOnSmallSweep) {
  const auto ctx = z2(2, {q(2), q(1)});
  const auto report = orthogonality_report(ctx, 4);
  EXPECT_EQ(report.violations, 0u);
  EXPECT_EQ(report.nonpositive_diagonal, 0u);
  // Family size: sum over n <= 4 of the harmonic counts, i.e. dim P_<=4.
  std::size_t family = 0;
  for (int n = 0; n <= 4; ++n) family += dim_homogeneous(2, n);
  EXPECT_EQ(report.entries.size(), family * (family + 1) / 2);
  EXPECT_THROW(orthogonality_report(DunklContext(builtin_root_system(RootFamily::B, 2, {q(1), q(1)})), 2),
               InvalidInput);
}

TEST(Orthogonality, ClassicalHermiteFunctions) {
  // kappa = 0, m = 1: CH_2(1) = 2 - 4x^2 = -H_2(x), and <H_2, H_2> = 8 sqrt(pi).
  const auto ctx = z2(1, {q(0)});
  const auto ch2 = ch_recursion(ctx, 1, c(1, 1)).polynomial;
  EXPECT_EQ(inner_product(ch2, ch2, {q(0)}).coefficient, 8);
}
