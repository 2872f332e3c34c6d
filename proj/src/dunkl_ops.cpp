#include "dunkl/dunkl_ops.hpp"

#include "dunkl/errors.hpp"

namespace dunkl {

DunklContext::DunklContext(RootSystem rs) : rs_(std::move(rs)) {
  reflections_.reserve(rs_.positive_roots().size());
  for (const auto& alpha : rs_.positive_roots()) reflections_.push_back(reflection_matrix(alpha));
}

namespace {

void require_dimension(const DunklContext& ctx, const Polynomial& f) {
  if (f.dimension() != ctx.dimension())
    throw InvalidInput("polynomial of dimension " + std::to_string(f.dimension()) +
                       " used with a root system of dimension " +
                       std::to_string(ctx.dimension()));
}

// (f - f o r_a) / <a, x> for one root.
Polynomial difference_quotient(const DunklContext& ctx, std::size_t root, const Polynomial& f) {
  const auto& alpha = ctx.root_system().positive_roots()[root];
  return exact_divide_by_linear_form(f - compose_with_linear_map(f, ctx.reflections()[root]),
                                     alpha);
}

}  // namespace

std::vector<Polynomial> dunkl_gradient(const DunklContext& ctx, const Polynomial& f) {
  require_dimension(ctx, f);
  const std::size_t m = ctx.dimension();
  std::vector<Polynomial> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(partial_derivative(i, f));
  const auto& roots = ctx.root_system().positive_roots();
  const auto& kappa = ctx.root_system().multiplicities();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (kappa[r] == 0) continue;
    const Polynomial q = difference_quotient(ctx, r, f);
    if (q.is_zero()) continue;
    for (std::size_t i = 0; i < m; ++i)
      if (roots[r][i] != 0) out[i] += q * Rational(kappa[r] * roots[r][i]);
  }
  return out;
}

Polynomial dunkl_apply(const DunklContext& ctx, std::size_t axis, const Polynomial& f) {
  require_dimension(ctx, f);
  if (axis >= ctx.dimension())
    throw InvalidInput("axis " + std::to_string(axis) + " out of range for dimension " +
                       std::to_string(ctx.dimension()));
  Polynomial out = partial_derivative(axis, f);
  const auto& roots = ctx.root_system().positive_roots();
  const auto& kappa = ctx.root_system().multiplicities();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (kappa[r] == 0 || roots[r][axis] == 0) continue;
    out += difference_quotient(ctx, r, f) * Rational(kappa[r] * roots[r][axis]);
  }
  return out;
}

Polynomial dunkl_laplacian(const DunklContext& ctx, const Polynomial& f) {
  Polynomial out(f.dimension());
  const auto grad = dunkl_gradient(ctx, f);
  for (std::size_t i = 0; i < grad.size(); ++i) out += dunkl_apply(ctx, i, grad[i]);
  return out;
}

Polynomial euler_apply(const Polynomial& f) {
  Polynomial out(f.dimension());
  for (const auto& [mono, c] : f.terms()) out.add_term(mono, c * mono.degree());
  return out;
}

Polynomial r2_multiply(const Polynomial& f) { return norm_squared(f.dimension()) * f; }

Polynomial sl2_apply(const DunklContext& ctx, Sl2 which, const Polynomial& f) {
  require_dimension(ctx, f);
  switch (which) {
    case Sl2::E: return r2_multiply(f) * Rational(1, 2);
    case Sl2::F: return dunkl_laplacian(ctx, f) * Rational(-1, 2);
    case Sl2::H: return euler_apply(f) + f * Rational(ctx.mu() / 2);
  }
  return f;
}

Polynomial laplace_beltrami(const DunklContext& ctx, const Polynomial& f) {
  require_dimension(ctx, f);
  Polynomial out = r2_multiply(dunkl_laplacian(ctx, f));
  // E(mu - 2 + E) acts on the degree-d part as d (mu - 2 + d).
  for (const auto& [mono, c] : f.terms()) {
    const Rational d = mono.degree();
    out.add_term(mono, -c * d * (ctx.mu() - 2 + d));
  }
  return out;
}

Polynomial gaussian_conjugated_dunkl(const DunklContext& ctx, const Rational& c,
                                     std::size_t axis, const Polynomial& f) {
  Polynomial out = dunkl_apply(ctx, axis, f);
  if (c != 0) out += Polynomial::variable(f.dimension(), axis) * f * Rational(2 * c);
  return out;
}

Polynomial gaussian_conjugated_laplacian(const DunklContext& ctx, const Rational& c,
                                         const Polynomial& f) {
  require_dimension(ctx, f);
  Polynomial out(f.dimension());
  for (std::size_t i = 0; i < ctx.dimension(); ++i)
    out += gaussian_conjugated_dunkl(ctx, c, i, gaussian_conjugated_dunkl(ctx, c, i, f));
  return out;
}

Polynomial heat_semigroup(const DunklContext& ctx, const Polynomial& f, const Rational& s) {
  require_dimension(ctx, f);
  Polynomial out = f;
  Polynomial power = f;
  Rational factor = 1;
  for (unsigned n = 1; !power.is_zero(); ++n) {
    power = dunkl_laplacian(ctx, power);
    factor *= s / n;
    out += power * factor;
  }
  return out;
}

}  // namespace dunkl
