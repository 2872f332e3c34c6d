#include <gtest/gtest.h>

#include "dunkl/errors.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/hermite.hpp"
#include "support.hpp"

using namespace dunkl;
using namespace dunkl::testing;

namespace {

std::vector<RootSystem> groups() {
  return {builtin_root_system(RootFamily::Z2, 1, {q(5, 3)}),
          builtin_root_system(RootFamily::Z2, 2, {q(1), q(1)}),
          builtin_root_system(RootFamily::A, 3, {q(1, 6)}),
          builtin_root_system(RootFamily::B, 2, {q(7, 2), q(2, 5)})};
}

// Laguerre coefficients from the three-term recurrence
// (n+1) L_{n+1} = (2n+1+a-x) L_n - (n+a) L_{n-1}.
std::vector<RationalVector> laguerre_by_recurrence(unsigned t_max, const Rational& a) {
  std::vector<RationalVector> out{{Rational(1)}, {Rational(1 + a), Rational(-1)}};
  for (unsigned n = 1; n < t_max; ++n) {
    RationalVector next(n + 2);
    for (unsigned i = 0; i <= n; ++i) {
      next[i] += (2 * n + 1 + a) * out[n][i];
      next[i + 1] -= out[n][i];
    }
    for (unsigned i = 0; i < n; ++i) next[i] -= (n + a) * out[n - 1][i];
    for (auto& c : next) c /= n + 1;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

TEST(Hermite, ExplicitLowOrderTable) {
  for (const auto& rs : groups()) {
    const DunklContext ctx(rs);
    const std::size_t m = rs.dimension();
    const Polynomial r2 = norm_squared(m);
    for (unsigned ell = 0; ell <= 3; ++ell) {
      const Rational s = 2 * static_cast<long>(ell) + rs.mu();
      for (const auto& h : harmonic_basis(ctx, ell).elements) {
        EXPECT_EQ(ch_recursion(ctx, 0, h).polynomial, h);
        EXPECT_EQ(ch_recursion(ctx, 1, h).polynomial, (q(-4) * r2 + c(m, 2 * s)) * h);
        EXPECT_EQ(ch_recursion(ctx, 2, h).polynomial,
                  (q(16) * (r2 * r2) - Rational(16 * (s + 2)) * r2 + c(m, 4 * (s + 2) * s)) * h);
      }
    }
  }
}

TEST(Hermite, ThreeConstructionsAgree) {
  for (const auto& rs : groups()) {
    const DunklContext ctx(rs);
    for (unsigned ell = 0; ell <= 2; ++ell)
      for (const auto& h : harmonic_basis(ctx, ell).elements)
        for (unsigned t = 0; t <= 3; ++t) {
          const auto r = ch_recursion(ctx, t, h);
          EXPECT_EQ(r.polynomial, ch_rodrigues(ctx, t, h).polynomial);
          EXPECT_EQ(r.polynomial, ch_laguerre(ctx, t, ell, h).polynomial);
          EXPECT_EQ(r.radial_coeffs.back(), pow(Rational(-4), t));
        }
  }
}

TEST(Hermite, RadialProfileDoesNotDependOnTheHarmonic) {
  const DunklContext ctx(builtin_root_system(RootFamily::B, 2, {q(1, 3), q(2)}));
  const auto basis = harmonic_basis(ctx, 3).elements;
  ASSERT_GE(basis.size(), 2u);
  for (unsigned t = 0; t <= 3; ++t)
    EXPECT_EQ(ch_recursion(ctx, t, basis[0]).radial_coeffs,
              ch_recursion(ctx, t, basis[1]).radial_coeffs);
}

TEST(Hermite, RejectsNonHarmonicInput) {
  const DunklContext ctx(builtin_root_system(RootFamily::Z2, 2, {q(1)}));
  EXPECT_THROW(ch_recursion(ctx, 1, x(2, 0) * x(2, 0)), InvalidInput);
  EXPECT_THROW(ch_rodrigues(ctx, 1, x(2, 0) + c(2, 1)), InvalidInput);
}

TEST(Laguerre, LowDegreeForms) {
  const Rational a = q(3, 7);
  EXPECT_EQ(laguerre_poly(0, a), (RationalVector{1}));
  EXPECT_EQ(laguerre_poly(1, a), (RationalVector{1 + a, -1}));
  EXPECT_EQ(laguerre_poly(2, a), (RationalVector{(a + 1) * (a + 2) / 2, -(a + 2), q(1, 2)}));
}

TEST(Laguerre, MatchesThreeTermRecurrence) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    Rational a = random_rational(rng, 9, 4);
    if (is_integer(a) && a < 0) a = -a;
    const auto reference = laguerre_by_recurrence(7, a);
    for (unsigned t = 0; t <= 7; ++t) EXPECT_EQ(laguerre_poly(t, a), reference[t]) << "a=" << a;
  }
}

TEST(Laguerre, RefusesGammaPoles) {
  EXPECT_THROW(laguerre_poly(1, q(-1)), PreconditionViolation);
  EXPECT_THROW(laguerre_poly(3, q(-3)), PreconditionViolation);
  EXPECT_NO_THROW(laguerre_poly(2, q(-3)));
  EXPECT_NO_THROW(laguerre_poly(2, q(-3, 2)));
}

TEST(Hermite, CoefficientRecursions) {
  const DunklContext ctx(builtin_root_system(RootFamily::A, 3, {q(4, 9)}));
  const auto h = harmonic_basis(ctx, 2).elements.front();
  const auto r0 = ch_recursion(ctx, 0, h);
  const auto r1 = ch_recursion(ctx, 1, h);
  const Rational s = 4 + ctx.mu();
  EXPECT_EQ(r1.radial_coeffs, (RationalVector{2 * s, -4}));
  EXPECT_TRUE(coefficient_recursions_check(nullptr, r0).ok());
  auto prev = r0;
  for (unsigned t = 1; t <= 4; ++t) {
    const auto rec = ch_recursion(ctx, t, h);
    const auto verdict = coefficient_recursions_check(&prev, rec);
    EXPECT_TRUE(verdict.ok()) << "t=" << t;
    EXPECT_GT(verdict.checks, 0u);
    prev = rec;
  }
  // A corrupted coefficient is caught.
  auto bad = ch_recursion(ctx, 2, h);
  bad.radial_coeffs[1] += 1;
  EXPECT_FALSE(coefficient_recursions_check(&r1, bad).ok());
}

TEST(Roesler, Examples) {
  const DunklContext ctx(builtin_root_system(RootFamily::B, 2, {q(1, 2), q(5, 4)}));
  EXPECT_EQ(rosler_hermite(ctx, x(2, 0)), q(2) * x(2, 0));
  EXPECT_EQ(rosler_hermite(ctx, norm_squared(2)), q(4) * norm_squared(2) - c(2, 2 * ctx.mu()));
  for (const auto& h : harmonic_basis(ctx, 3).elements) EXPECT_EQ(rosler_hermite(ctx, h), q(8) * h);
  EXPECT_THROW(rosler_hermite(ctx, x(2, 0) + c(2, 1)), InvalidInput);
}

TEST(Roesler, EigenvalueEquation) {
  const DunklContext ctx(builtin_root_system(RootFamily::Z2, 1, {q(2, 3)}));
  const auto ch2 = ch_recursion(ctx, 1, c(1, 1)).polynomial;
  EXPECT_EQ(ch2, q(-4) * (x(1, 0) * x(1, 0)) + c(1, 2 * ctx.mu()));
  EXPECT_TRUE(eigen_residual(ctx, 2, ch2).is_zero());
  EXPECT_FALSE(eigen_residual(ctx, 2, x(1, 0) * x(1, 0)).is_zero());
}

TEST(Roesler, EigenspacesSpanPn) {
  const DunklContext ctx(builtin_root_system(RootFamily::Z2, 2, {q(1, 2), q(3)}));
  for (unsigned n = 0; n <= 4; ++n) {
    const auto report = eigenspace_checks(ctx, n);
    EXPECT_TRUE(report.verdict.ok());
    EXPECT_EQ(report.dim_pn, n + 1);
    EXPECT_EQ(report.rank_roesler, n + 1);
    EXPECT_EQ(report.rank_hermite, n + 1);
    EXPECT_EQ(report.rank_union, n + 1);
  }
}

TEST(Roesler, ProportionalityConstants) {
  const DunklContext ctx(builtin_root_system(RootFamily::Z2, 2, {q(2, 7), q(5, 3)}));
  EXPECT_EQ(proportionality_constant(ctx, 1, 2, c(2, 1)), -1);
  for (unsigned n = 0; n <= 3; ++n)
    for (const auto& h : harmonic_basis(ctx, n).elements)
      EXPECT_EQ(proportionality_constant(ctx, 0, n, h), pow(Rational(2), n));
  const Rational c13 = proportionality_constant(ctx, 1, 3, x(2, 0));
  EXPECT_EQ(proportionality_constant(ctx, 1, 3, x(2, 1)), c13);
  EXPECT_THROW(proportionality_constant(ctx, 1, 3, x(2, 0) * x(2, 1)), InvalidInput);
}

TEST(Weighted, EigenfunctionExamples) {
  const DunklContext ctx(builtin_root_system(RootFamily::A, 3, {q(3, 5)}));
  EXPECT_TRUE(weighted_eigenfunction_check(ctx, c(3, 1)).ok());
  EXPECT_TRUE(weighted_eigenfunction_check(ctx, q(2) * x(3, 0)).ok());
  EXPECT_TRUE(weighted_eigenfunction_check(ctx, ch_recursion(ctx, 1, c(3, 1)).polynomial).ok());
  // x1^2 is not in V_2, so the precondition fails.
  EXPECT_FALSE(weighted_eigenfunction_check(ctx, x(3, 0) * x(3, 0)).ok());
}

TEST(Weighted, ProductRuleAgreesWithConjugation) {
  const DunklContext ctx(builtin_root_system(RootFamily::B, 2, {q(1, 4), q(2, 3)}));
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 6; ++trial) {
    const Rational rate = random_rational(rng, 3, 4);
    const auto p = random_polynomial(rng, 2, 4, 4);
    const WeightedFunction f{p, rate};
    for (std::size_t i = 0; i < 2; ++i) {
      const auto g = apply_dunkl(ctx, i, f);
      EXPECT_EQ(g.gaussian_rate, rate);
      EXPECT_EQ(g.polynomial_part, dunkl_apply(ctx, i, p) + Rational(2 * rate) * (x(2, i) * p));
    }
    Polynomial lap(2);
    for (std::size_t i = 0; i < 2; ++i)
      lap += apply_dunkl(ctx, i, apply_dunkl(ctx, i, f)).polynomial_part;
    EXPECT_EQ(apply_laplacian(ctx, f).polynomial_part, lap);
  }
}
