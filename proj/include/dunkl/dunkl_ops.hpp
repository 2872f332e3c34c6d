#pragma once

#include <cstddef>
#include <vector>

#include "dunkl/linalg.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

// A root system together with its reflection matrices, computed once.
class DunklContext {
 public:
  explicit DunklContext(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t dimension() const { return rs_.dimension(); }
  const Rational& mu() const { return rs_.mu(); }
  const std::vector<RationalMatrix>& reflections() const { return reflections_; }

 private:
  RootSystem rs_;
  std::vector<RationalMatrix> reflections_;
};

// T_i f = d_i f + sum_{a in R+} kappa_a a_i (f - f o r_a) / <a, x>, axis 0-based.
Polynomial dunkl_apply(const DunklContext& ctx, std::size_t axis, const Polynomial& f);

// (T_1 f, ..., T_m f), sharing the divided differences between axes.
std::vector<Polynomial> dunkl_gradient(const DunklContext& ctx, const Polynomial& f);

// Delta_k f = sum_i T_i^2 f.
Polynomial dunkl_laplacian(const DunklContext& ctx, const Polynomial& f);

// Euler operator sum_i x_i d_i.
Polynomial euler_apply(const Polynomial& f);
// |x|^2 f
Polynomial r2_multiply(const Polynomial& f);

enum class Sl2 { E, F, H };

// E = |x|^2/2, F = -Delta_k/2, H = Euler + mu/2.
Polynomial sl2_apply(const DunklContext& ctx, Sl2 which, const Polynomial& f);

// Delta_LB = |x|^2 Delta_k - Euler (mu - 2 + Euler).
Polynomial laplace_beltrami(const DunklContext& ctx, const Polynomial& f);

// Polynomial part of T_i (f e^{c|x|^2}) e^{-c|x|^2} = T_i f + 2 c x_i f. The
// Gaussian is G-invariant, so it passes through every difference quotient.
Polynomial gaussian_conjugated_dunkl(const DunklContext& ctx, const Rational& c,
                                     std::size_t axis, const Polynomial& f);

// sum_i (T_i + 2 c x_i)^2 f.
Polynomial gaussian_conjugated_laplacian(const DunklContext& ctx, const Rational& c,
                                         const Polynomial& f);

// exp(s Delta_k) f as the finite series sum_n s^n/n! Delta_k^n f. The default
// s = -1/4 is the heat semigroup used for the Roesler Hermite polynomials.
Polynomial heat_semigroup(const DunklContext& ctx, const Polynomial& f,
                          const Rational& s = Rational(-1, 4));

}  // namespace dunkl
