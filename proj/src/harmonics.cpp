#include "dunkl/harmonics.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/linalg.hpp"

namespace dunkl {

HarmonicBasis harmonic_basis(const DunklContext& ctx, unsigned degree) {
  const std::size_t m = ctx.dimension();
  const auto mat = materialize_on_degree(
      m, [&](const Polynomial& f) { return dunkl_laplacian(ctx, f); }, degree,
      static_cast<int>(degree) - 2);
  HarmonicBasis basis;
  basis.degree = degree;
  for (const auto& v : rational_nullspace(mat.entries))
    basis.elements.push_back(from_coefficient_vector(m, degree, v));
  return basis;
}

std::size_t classical_harmonic_dimension(std::size_t m, unsigned degree) {
  return dim_homogeneous(m, static_cast<int>(degree)) -
         dim_homogeneous(m, static_cast<int>(degree) - 2);
}

bool in_minus_two_n(const Rational& mu) {
  return is_integer(mu) && mu <= 0 && mpz_even_p(mu.get_num_mpz_t());
}

void require_fischer_admissible(const Rational& mu) {
  if (in_minus_two_n(mu))
    throw PreconditionViolation("Fischer requires μ ∉ −2ℕ, got μ = " + to_string(mu));
}

std::vector<FischerComponent> fischer_decompose(const DunklContext& ctx, const Polynomial& p) {
  require_fischer_admissible(ctx.mu());
  const std::size_t m = ctx.dimension();
  if (p.dimension() != m)
    throw InvalidInput("polynomial of dimension " + std::to_string(p.dimension()) +
                       " used with a root system of dimension " + std::to_string(m));
  if (p.is_zero()) return {};
  if (!p.is_homogeneous())
    throw InvalidInput("Fischer decomposition needs a homogeneous polynomial, got " +
                       p.to_string());
  const auto k = static_cast<unsigned>(p.degree());

  struct Column {
    unsigned i;
    Polynomial harmonic;
  };
  std::vector<Column> frame;
  std::vector<RationalVector> columns;
  const Polynomial r2 = norm_squared(m);
  Polynomial r2_power = Polynomial::constant(m, 1);
  for (unsigned i = 0; 2 * i <= k; ++i) {
    for (auto& h : harmonic_basis(ctx, k - 2 * i).elements) {
      columns.push_back(coefficient_vector(r2_power * h, k));
      frame.push_back({i, std::move(h)});
    }
    r2_power = r2_power * r2;
  }
  if (columns.size() != dim_homogeneous(m, static_cast<int>(k)))
    throw PreconditionViolation("Fischer frame for degree " + std::to_string(k) + " has " +
                                std::to_string(columns.size()) + " elements, expected " +
                                std::to_string(dim_homogeneous(m, static_cast<int>(k))) +
                                " (mu = " + to_string(ctx.mu()) + ")");
  const auto coeffs = solve_in_span(columns, coefficient_vector(p, k));
  if (!coeffs || rank(RationalMatrix::from_columns(columns.front().size(), columns)) !=
                     columns.size())
    throw PreconditionViolation("Fischer frame is degenerate for mu = " + to_string(ctx.mu()));

  std::vector<FischerComponent> out;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if ((*coeffs)[j] == 0) continue;
    if (out.empty() || out.back().i != frame[j].i)
      out.push_back({frame[j].i, Polynomial(m), Polynomial(m)});
    out.back().harmonic += frame[j].harmonic * (*coeffs)[j];
  }
  for (auto& c : out) c.component = pow(r2, c.i) * c.harmonic;
  return out;
}

Polynomial fischer_project(const DunklContext& ctx, unsigned i, unsigned k, const Polynomial& p) {
  if (2 * i > k)
    throw InvalidInput("projection index " + std::to_string(i) + " exceeds floor(k/2) for k=" +
                       std::to_string(k));
  const Rational& mu = ctx.mu();
  Polynomial out = p;
  for (unsigned l = 0; 2 * l <= k; ++l) {
    if (l == i) continue;
    const Rational shift = Rational(static_cast<long>(k) - 2 * static_cast<long>(l)) *
                           (mu - 2 + static_cast<long>(k) - 2 * static_cast<long>(l));
    const Rational denom = 2 * Rational(static_cast<long>(i) - static_cast<long>(l)) *
                           (Rational(2 * static_cast<long>(k) - 2 * static_cast<long>(i) -
                                     2 * static_cast<long>(l)) +
                            mu - 2);
    if (denom == 0)
      throw PreconditionViolation("Fischer projection denominator vanishes at i=" +
                                  std::to_string(i) + ", l=" + std::to_string(l) +
                                  ", mu=" + to_string(mu));
    out = (laplace_beltrami(ctx, out) + out * shift) * Rational(1 / denom);
  }
  return out;
}

}  // namespace dunkl
