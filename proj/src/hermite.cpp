#include "dunkl/hermite.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/linalg.hpp"

namespace dunkl {

void Verdict::expect_zero(std::string label, const Polynomial& residual) {
  ++checks;
  if (!residual.is_zero()) failures.push_back({std::move(label), residual});
}

void require_harmonic(const DunklContext& ctx, const Polynomial& h) {
  if (h.dimension() != ctx.dimension())
    throw InvalidInput("harmonic of dimension " + std::to_string(h.dimension()) +
                       " used with a root system of dimension " +
                       std::to_string(ctx.dimension()));
  if (h.is_zero() || !h.is_homogeneous())
    throw InvalidInput("expected a nonzero homogeneous Dunkl harmonic, got " + h.to_string());
  const Polynomial lap = dunkl_laplacian(ctx, h);
  if (!lap.is_zero())
    throw InvalidInput("input is not Dunkl-harmonic: Delta_k(" + h.to_string() +
                       ") = " + lap.to_string());
}

Polynomial d_plus_squared(const DunklContext& ctx, const Polynomial& f) {
  Polynomial out = -dunkl_laplacian(ctx, f);
  out -= r2_multiply(f) * Rational(4);
  out += euler_apply(f) * Rational(4);
  out += f * Rational(2 * ctx.mu());
  return out;
}

Polynomial assemble_radial(const RationalVector& coeffs, const Polynomial& h) {
  const Polynomial r2 = norm_squared(h.dimension());
  Polynomial out(h.dimension());
  Polynomial term = h;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out += term * coeffs[i];
    if (i + 1 < coeffs.size()) term = r2 * term;
  }
  return out;
}

RationalVector radial_profile(const Polynomial& p, const Polynomial& h, unsigned t) {
  if (h.is_zero() || !h.is_homogeneous())
    throw InvalidInput("radial profile needs a nonzero homogeneous harmonic");
  const unsigned top = static_cast<unsigned>(h.degree()) + 2 * t;
  if (p.degree() > static_cast<int>(top))
    throw InvalidInput("polynomial of degree " + std::to_string(p.degree()) +
                       " exceeds the radial frame of degree " + std::to_string(top));
  std::vector<RationalVector> columns;
  const Polynomial r2 = norm_squared(h.dimension());
  Polynomial term = h;
  for (unsigned i = 0; i <= t; ++i) {
    columns.push_back(coefficient_vector_upto(term, top));
    term = r2 * term;
  }
  auto coeffs = solve_in_span(columns, coefficient_vector_upto(p, top));
  if (!coeffs)
    throw InvalidInput("polynomial " + p.to_string() + " is not of the form phi(|x|^2) * (" +
                       h.to_string() + ")");
  return *coeffs;
}

namespace {

HermiteRecord make_record(const DunklContext& ctx, unsigned t, const Polynomial& h,
                          Polynomial poly) {
  HermiteRecord rec;
  rec.t = t;
  rec.ell = static_cast<unsigned>(h.degree());
  rec.mu = ctx.mu();
  rec.harmonic = h;
  rec.radial_coeffs = radial_profile(poly, h, t);
  rec.polynomial = std::move(poly);
  return rec;
}

}  // namespace

HermiteRecord ch_recursion(const DunklContext& ctx, unsigned t, const Polynomial& h) {
  require_harmonic(ctx, h);
  Polynomial p = h;
  for (unsigned s = 0; s < t; ++s) p = d_plus_squared(ctx, p);
  return make_record(ctx, t, h, std::move(p));
}

HermiteRecord ch_rodrigues(const DunklContext& ctx, unsigned t, const Polynomial& h) {
  require_harmonic(ctx, h);
  Polynomial p = h;
  for (unsigned s = 0; s < t; ++s) p = -gaussian_conjugated_laplacian(ctx, Rational(-1), p);
  return make_record(ctx, t, h, std::move(p));
}

RationalVector laguerre_poly(unsigned t, const Rational& a) {
  if (is_integer(a) && a < 0 && a >= -static_cast<long>(t))
    throw PreconditionViolation("Laguerre parameter a = " + to_string(a) +
                                " hits a Gamma pole for degree t = " + std::to_string(t));
  // c_i = (-1)^i / (i! (t-i)!) * prod_{j=i+1}^{t} (a + j)
  RationalVector coeffs(t + 1);
  for (unsigned i = 0; i <= t; ++i) {
    Rational rising = 1;
    for (unsigned j = i + 1; j <= t; ++j) rising *= a + j;
    Rational c = rising / Rational(factorial(i) * factorial(t - i));
    coeffs[i] = (i % 2) ? Rational(-c) : c;
  }
  return coeffs;
}

HermiteRecord ch_laguerre(const DunklContext& ctx, unsigned t, unsigned ell, const Polynomial& h) {
  require_harmonic(ctx, h);
  if (h.degree() != static_cast<int>(ell))
    throw InvalidInput("harmonic has degree " + std::to_string(h.degree()) + ", expected " +
                       std::to_string(ell));
  const Rational a = ctx.mu() / 2 + static_cast<long>(ell) - 1;
  RationalVector coeffs = laguerre_poly(t, a);
  const Rational scale = pow(Rational(4), t) * Rational(factorial(t));
  for (auto& c : coeffs) c *= scale;

  HermiteRecord rec;
  rec.t = t;
  rec.ell = ell;
  rec.mu = ctx.mu();
  rec.harmonic = h;
  rec.polynomial = assemble_radial(coeffs, h);
  rec.radial_coeffs = std::move(coeffs);
  return rec;
}

Verdict coefficient_recursions_check(const HermiteRecord* record_prev,
                                     const HermiteRecord& record) {
  const std::size_t m = record.harmonic.dimension();
  const Rational& mu = record.mu;
  const Rational two_ell = 2 * static_cast<long>(record.ell);
  const auto& a = record.radial_coeffs;
  auto coeff = [](const RationalVector& v, long i) {
    return (i < 0 || i >= static_cast<long>(v.size())) ? Rational(0) : v[static_cast<std::size_t>(i)];
  };
  if (a.size() != record.t + 1)
    throw InvalidInput("record with t = " + std::to_string(record.t) + " carries " +
                       std::to_string(a.size()) + " radial coefficients");

  Verdict verdict;
  if (record_prev) {
    if (record_prev->t + 1 != record.t || record_prev->ell != record.ell ||
        record_prev->mu != record.mu)
      throw InvalidInput("coefficient recursion needs consecutive records with equal ell and mu");
    const auto& b = record_prev->radial_coeffs;
    for (long i = 0; i <= static_cast<long>(record.t); ++i) {
      const Rational expected = -(2 * i + 2) * (two_ell + mu + 2 * i) * coeff(b, i + 1) +
                                2 * (two_ell + 4 * i + mu) * coeff(b, i) -
                                4 * coeff(b, i - 1);
      verdict.expect_zero("step recursion t=" + std::to_string(record.t) +
                              " i=" + std::to_string(i),
                          Polynomial::constant(m, coeff(a, i) - expected));
    }
  } else if (record.t == 0) {
    verdict.expect_zero("a_0 of CH_0", Polynomial::constant(m, coeff(a, 0) - 1));
  }
  const long t = record.t;
  for (long i = 0; i <= t; ++i) {
    const Rational lhs = -2 * (2 * t - 2 * i) * coeff(a, i);
    const Rational rhs = (2 * i + 2) * (two_ell + mu + 2 * i) * coeff(a, i + 1);
    verdict.expect_zero("eigen relation t=" + std::to_string(t) + " i=" + std::to_string(i),
                        Polynomial::constant(m, lhs - rhs));
  }
  return verdict;
}

Polynomial rosler_hermite(const DunklContext& ctx, const Polynomial& p) {
  if (p.is_zero()) return p;
  if (!p.is_homogeneous())
    throw InvalidInput("Roesler Hermite polynomial needs a homogeneous input, got " +
                       p.to_string());
  return heat_semigroup(ctx, p) * pow(Rational(2), static_cast<unsigned>(p.degree()));
}

Polynomial eigen_residual(const DunklContext& ctx, unsigned n, const Polynomial& q) {
  Polynomial r = dunkl_laplacian(ctx, q);
  r -= euler_apply(q) * Rational(2);
  r += q * Rational(2 * static_cast<long>(n));
  return r;
}

EigenspaceReport eigenspace_checks(const DunklContext& ctx, unsigned n) {
  const std::size_t m = ctx.dimension();
  EigenspaceReport report;
  report.dim_pn = dim_homogeneous(m, static_cast<int>(n));

  std::vector<RationalVector> roesler_cols;
  for (const auto& mono : monomial_basis(m, n)) {
    const Polynomial q = rosler_hermite(ctx, Polynomial::term(mono, 1));
    report.verdict.expect_zero("Roesler " + Polynomial::term(mono, 1).to_string(),
                               eigen_residual(ctx, n, q));
    roesler_cols.push_back(coefficient_vector_upto(q, n));
  }
  std::vector<RationalVector> hermite_cols;
  for (unsigned t = 0; 2 * t <= n; ++t) {
    const unsigned ell = n - 2 * t;
    for (const auto& h : harmonic_basis(ctx, ell).elements) {
      const Polynomial q = ch_recursion(ctx, t, h).polynomial;
      report.verdict.expect_zero("CH_" + std::to_string(2 * t) + "(" + h.to_string() + ")",
                                 eigen_residual(ctx, n, q));
      hermite_cols.push_back(coefficient_vector_upto(q, n));
    }
  }
  const std::size_t rows = roesler_cols.front().size();
  report.rank_roesler = rank(RationalMatrix::from_columns(rows, roesler_cols));
  report.rank_hermite =
      hermite_cols.empty() ? 0 : rank(RationalMatrix::from_columns(rows, hermite_cols));
  std::vector<RationalVector> both = roesler_cols;
  both.insert(both.end(), hermite_cols.begin(), hermite_cols.end());
  report.rank_union = rank(RationalMatrix::from_columns(rows, both));

  auto rank_check = [&](const std::string& what, std::size_t r) {
    report.verdict.expect_zero(
        what + " rank " + std::to_string(r) + " vs dim P_n " + std::to_string(report.dim_pn),
        Polynomial::constant(m, Rational(static_cast<long>(r)) -
                                    static_cast<long>(report.dim_pn)));
  };
  rank_check("Roesler family", report.rank_roesler);
  rank_check("Clifford-Hermite family", report.rank_hermite);
  rank_check("union", report.rank_union);
  return report;
}

Rational proportionality_constant(const DunklContext& ctx, unsigned i, unsigned n,
                                  const Polynomial& h) {
  require_harmonic(ctx, h);
  if (2 * i > n || h.degree() != static_cast<int>(n - 2 * i))
    throw InvalidInput("harmonic of degree " + std::to_string(h.degree()) +
                       " does not match n - 2i = " + std::to_string(static_cast<int>(n) - 2 * static_cast<int>(i)));
  const Polynomial lhs = rosler_hermite(ctx, pow(norm_squared(ctx.dimension()), i) * h);
  const Polynomial rhs = ch_recursion(ctx, i, h).polynomial;
  const Rational c = lhs.leading_coefficient() / rhs.leading_coefficient();
  const Polynomial residual = lhs - rhs * c;
  if (!residual.is_zero())
    throw PreconditionViolation("Roesler polynomial of |x|^" + std::to_string(2 * i) + "*(" +
                                h.to_string() + ") is not proportional to CH_" +
                                std::to_string(2 * i) + "; residual " + residual.to_string());
  return c;
}

WeightedFunction apply_dunkl(const DunklContext& ctx, std::size_t axis, const WeightedFunction& f) {
  return {gaussian_conjugated_dunkl(ctx, f.gaussian_rate, axis, f.polynomial_part),
          f.gaussian_rate};
}

WeightedFunction apply_laplacian(const DunklContext& ctx, const WeightedFunction& f) {
  return {gaussian_conjugated_laplacian(ctx, f.gaussian_rate, f.polynomial_part),
          f.gaussian_rate};
}

Verdict weighted_eigenfunction_check(const DunklContext& ctx, const Polynomial& q) {
  Verdict verdict;
  if (q.is_zero()) return verdict;
  const auto n = static_cast<unsigned>(q.degree());
  verdict.expect_zero("eigenspace precondition n=" + std::to_string(n),
                      eigen_residual(ctx, n, q));
  const WeightedFunction f{q, Rational(-1, 2)};
  Polynomial residual = apply_laplacian(ctx, f).polynomial_part;
  residual -= r2_multiply(q);
  residual += q * Rational(2 * static_cast<long>(n) + ctx.mu());
  verdict.expect_zero("weighted eigenfunction n=" + std::to_string(n), residual);
  return verdict;
}

}  // namespace dunkl
