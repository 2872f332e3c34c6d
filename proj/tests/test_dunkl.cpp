#include <gtest/gtest.h>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/harmonics.hpp"
#include "support.hpp"

using namespace dunkl;
using namespace dunkl::testing;

namespace {

DunklContext z2(std::size_t m, RationalVector kappa) {
  return DunklContext(builtin_root_system(RootFamily::Z2, m, kappa));
}

// Dunkl Laplacian from its closed form
//   Delta f + 2 sum_a kappa_a (<grad f, a> <a,x> - |a|^2/2 (f - f o r_a)) / <a,x>^2,
// which never composes two Dunkl operators.
Polynomial laplacian_oracle(const RootSystem& rs, const Polynomial& f) {
  const std::size_t m = rs.dimension();
  Polynomial out(m);
  for (std::size_t i = 0; i < m; ++i) out += partial_derivative(i, partial_derivative(i, f));
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    const auto& a = rs.positive_roots()[r];
    const Rational norm = dot(a, a);
    RationalMatrix refl = RationalMatrix::identity(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) refl(i, j) -= Rational(2) * a[i] * a[j] / norm;
    Polynomial grad_a(m);
    for (std::size_t i = 0; i < m; ++i) grad_a += a[i] * partial_derivative(i, f);
    const Polynomial numerator =
        grad_a * linear_form(a) - Rational(norm / 2) * (f - compose_with_linear_map(f, refl));
    const Polynomial quotient =
        exact_divide_by_linear_form(exact_divide_by_linear_form(numerator, a), a);
    out += Rational(2 * rs.multiplicities()[r]) * quotient;
  }
  return out;
}

std::vector<RootSystem> test_groups() {
  return {builtin_root_system(RootFamily::Z2, 2, {q(1, 3), q(5, 2)}),
          builtin_root_system(RootFamily::A, 3, {q(2, 3)}),
          builtin_root_system(RootFamily::B, 2, {q(1, 2), q(7, 4)}),
          builtin_root_system(RootFamily::B, 3, {q(1), q(1, 5)}),
          builtin_root_system(RootFamily::D, 3, {q(3, 2)})};
}

}  // namespace

TEST(Dunkl, RankOneExamples) {
  const Rational kappa = q(3, 7);
  const auto ctx = z2(1, {kappa});
  const Polynomial x1 = x(1, 0);
  EXPECT_EQ(dunkl_apply(ctx, 0, x1 * x1), q(2) * x1);
  EXPECT_EQ(dunkl_apply(ctx, 0, x1 * x1 * x1), Rational(3 + 2 * kappa) * (x1 * x1));
  EXPECT_TRUE(dunkl_apply(ctx, 0, c(1, 5)).is_zero());
  EXPECT_EQ(dunkl_laplacian(ctx, x1 * x1 * x1), Rational(2 * (3 + 2 * kappa)) * x1);
}

TEST(Dunkl, RankOneClosedFormOnAllPowers) {
  // T x^n = (n + kappa (1 - (-1)^n)) x^(n-1)
  for (const Rational kappa : {q(0), q(1, 2), q(5, 3)}) {
    const auto ctx = z2(1, {kappa});
    for (unsigned n = 1; n <= 12; ++n) {
      const Rational factor = Rational(n) + (n % 2 ? 2 * kappa : Rational(0));
      EXPECT_EQ(dunkl_apply(ctx, 0, pow(x(1, 0), n)), factor * pow(x(1, 0), n - 1));
    }
  }
}

TEST(Dunkl, LaplacianOfNormSquaredIsTwoMu) {
  for (const auto& rs : test_groups()) {
    const DunklContext ctx(rs);
    EXPECT_EQ(dunkl_laplacian(ctx, norm_squared(rs.dimension())), c(rs.dimension(), 2 * rs.mu()))
        << rs.label();
  }
}

TEST(Dunkl, ZeroMultiplicityIsClassical) {
  const auto ctx = z2(2, {q(0)});
  const Polynomial p = x(2, 0) * x(2, 0) * x(2, 1);
  EXPECT_EQ(dunkl_laplacian(ctx, p), q(2) * x(2, 1));
  const DunklContext a(builtin_root_system(RootFamily::A, 3, {q(0)}));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_polynomial(rng, 3, 4, 5);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(dunkl_apply(a, i, f), partial_derivative(i, f));
  }
}

TEST(Dunkl, LaplacianMatchesClosedFormOracle) {
  std::mt19937_64 rng(42);
  for (const auto& rs : test_groups()) {
    const DunklContext ctx(rs);
    for (int trial = 0; trial < 8; ++trial) {
      const auto f = random_polynomial(rng, rs.dimension(), 5, 6);
      EXPECT_EQ(dunkl_laplacian(ctx, f), laplacian_oracle(rs, f)) << rs.label() << " " << f.to_string();
    }
  }
}

TEST(Dunkl, OperatorsCommuteOnRandomPolynomials) {
  std::mt19937_64 rng(43);
  for (const auto& rs : test_groups()) {
    const DunklContext ctx(rs);
    const std::size_t m = rs.dimension();
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_polynomial(rng, m, 5, 6);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          EXPECT_EQ(dunkl_apply(ctx, i, dunkl_apply(ctx, j, f)),
                    dunkl_apply(ctx, j, dunkl_apply(ctx, i, f)));
    }
  }
}

TEST(Dunkl, GradientMatchesAxisByAxis) {
  std::mt19937_64 rng(44);
  for (const auto& rs : test_groups()) {
    const DunklContext ctx(rs);
    const auto f = random_polynomial(rng, rs.dimension(), 5, 6);
    const auto grad = dunkl_gradient(ctx, f);
    for (std::size_t i = 0; i < rs.dimension(); ++i) EXPECT_EQ(grad[i], dunkl_apply(ctx, i, f));
  }
}

TEST(Dunkl, InvariantUnderRootRescaling) {
  const auto a2 = builtin_root_system(RootFamily::A, 3, {q(4, 3)});
  std::vector<RationalVector> scaled;
  for (const auto& r : a2.positive_roots()) {
    RationalVector s = r;
    for (auto& e : s) e *= q(-5, 2);
    scaled.push_back(s);
  }
  const DunklContext ctx(a2);
  const DunklContext ctx_scaled(custom_root_system(scaled, a2.multiplicities()));
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_polynomial(rng, 3, 5, 6);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(dunkl_apply(ctx, i, f), dunkl_apply(ctx_scaled, i, f));
  }
}

TEST(Dunkl, ProductRuleWithInvariantFactor) {
  // T_i(|x|^2 f) = 2 x_i f + |x|^2 T_i f since |x|^2 is G-invariant.
  std::mt19937_64 rng(46);
  for (const auto& rs : test_groups()) {
    const DunklContext ctx(rs);
    const std::size_t m = rs.dimension();
    const auto f = random_polynomial(rng, m, 4, 5);
    for (std::size_t i = 0; i < m; ++i)
      EXPECT_EQ(dunkl_apply(ctx, i, r2_multiply(f)),
                q(2) * (x(m, i) * f) + r2_multiply(dunkl_apply(ctx, i, f)));
  }
}

TEST(Dunkl, EulerAndNormSquared) {
  const Polynomial p = x(2, 0) * x(2, 0) * x(2, 1);
  EXPECT_EQ(euler_apply(p), q(3) * p);
  EXPECT_TRUE(euler_apply(c(2, 1)).is_zero());
  EXPECT_EQ(r2_multiply(x(2, 0)), x(2, 0) * x(2, 0) * x(2, 0) + x(2, 0) * x(2, 1) * x(2, 1));
}

TEST(Dunkl, Sl2Examples) {
  const DunklContext ctx(builtin_root_system(RootFamily::B, 2, {q(1, 2), q(1, 3)}));
  const Rational mu = ctx.mu();
  const Polynomial one = c(2, 1);
  EXPECT_EQ(sl2_apply(ctx, Sl2::H, one), c(2, mu / 2));
  EXPECT_EQ(sl2_apply(ctx, Sl2::E, sl2_apply(ctx, Sl2::F, one)) -
                sl2_apply(ctx, Sl2::F, sl2_apply(ctx, Sl2::E, one)),
            c(2, mu / 2));
  const Polynomial x1 = x(2, 0);
  EXPECT_EQ(sl2_apply(ctx, Sl2::H, sl2_apply(ctx, Sl2::E, x1)) -
                sl2_apply(ctx, Sl2::E, sl2_apply(ctx, Sl2::H, x1)),
            q(2) * sl2_apply(ctx, Sl2::E, x1));
}

TEST(Dunkl, LaplaceBeltramiExamples) {
  const DunklContext ctx(builtin_root_system(RootFamily::A, 3, {q(2, 5)}));
  EXPECT_TRUE(laplace_beltrami(ctx, c(3, 1)).is_zero());
  EXPECT_TRUE(laplace_beltrami(ctx, norm_squared(3)).is_zero());
  for (unsigned ell = 1; ell <= 3; ++ell)
    for (const auto& h : harmonic_basis(ctx, ell).elements)
      EXPECT_EQ(laplace_beltrami(ctx, h), Rational(-Rational(ell) * (ctx.mu() - 2 + ell)) * h);
}

TEST(Dunkl, GaussianConjugation) {
  const Rational kappa = q(5, 4);
  const auto ctx = z2(1, {kappa});
  const Rational mu = ctx.mu();
  const Polynomial x1 = x(1, 0);
  // c = 0 is the plain operator.
  std::mt19937_64 rng(47);
  const auto f = random_polynomial(rng, 1, 5, 4);
  EXPECT_EQ(gaussian_conjugated_laplacian(ctx, q(0), f), dunkl_laplacian(ctx, f));
  EXPECT_EQ(gaussian_conjugated_dunkl(ctx, q(0), 0, f), dunkl_apply(ctx, 0, f));
  // sum (T - 2x)^2 (1) = 4x^2 - 2 mu
  EXPECT_EQ(gaussian_conjugated_laplacian(ctx, q(-1), c(1, 1)), q(4) * (x1 * x1) - c(1, 2 * mu));
  // (Delta_k - |x|^2) e^{-|x|^2/2} = -mu e^{-|x|^2/2}
  EXPECT_EQ(gaussian_conjugated_laplacian(ctx, q(-1, 2), c(1, 1)) - x1 * x1, c(1, -mu));
}

TEST(Dunkl, HeatSemigroupExamples) {
  const DunklContext ctx(builtin_root_system(RootFamily::B, 2, {q(1, 2), q(3, 2)}));
  EXPECT_EQ(heat_semigroup(ctx, x(2, 1)), x(2, 1));
  EXPECT_EQ(heat_semigroup(ctx, norm_squared(2)), norm_squared(2) - c(2, ctx.mu() / 2));
  for (const auto& h : harmonic_basis(ctx, 3).elements) EXPECT_EQ(heat_semigroup(ctx, h), h);
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_polynomial(rng, 2, 7, 6);
    EXPECT_EQ(heat_semigroup(ctx, heat_semigroup(ctx, f), q(1, 4)), f);
  }
}
