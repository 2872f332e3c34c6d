#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

// One Clifford-Hermite polynomial CH_{2t}(H) = sum_i a_{2i} |x|^{2i} H for a
// Dunkl harmonic H of degree ell.
struct HermiteRecord {
  unsigned t = 0;
  unsigned ell = 0;
  Rational mu;
  Polynomial harmonic;
  RationalVector radial_coeffs;  // a_0, a_2, ..., a_{2t}
  Polynomial polynomial;
};

// A failed identity, with its exact nonzero residual.
struct Residual {
  std::string label;
  Polynomial value;
};

struct Verdict {
  std::size_t checks = 0;
  std::vector<Residual> failures;
  bool ok() const { return failures.empty(); }
  void expect_zero(std::string label, const Polynomial& residual);
};

// Throws InvalidInput unless h is a nonzero homogeneous Dunkl harmonic.
void require_harmonic(const DunklContext& ctx, const Polynomial& h);

// The scalar operator D+^2 = -Delta_k - 4|x|^2 + 2(2E + mu).
Polynomial d_plus_squared(const DunklContext& ctx, const Polynomial& f);

// Coordinates a_i with p == sum_i a_i |x|^{2i} h, i = 0..t; throws
// InvalidInput when p does not lie in that span.
RationalVector radial_profile(const Polynomial& p, const Polynomial& h, unsigned t);

// Assembles sum_i coeffs[i] |x|^{2i} h.
Polynomial assemble_radial(const RationalVector& coeffs, const Polynomial& h);

// CH_{2t}(H) = (D+^2)^t H.
HermiteRecord ch_recursion(const DunklContext& ctx, unsigned t, const Polynomial& h);

// CH_{2t}(H) = e^{|x|^2} (-Delta_k)^t e^{-|x|^2} H, via Gaussian conjugation.
HermiteRecord ch_rodrigues(const DunklContext& ctx, unsigned t, const Polynomial& h);

// Coefficients c_0..c_t of the generalized Laguerre polynomial L_t^a, using
// Gamma ratios as rising products. Refuses a in {-1, ..., -t}.
RationalVector laguerre_poly(unsigned t, const Rational& a);

// CH_{2t}(H) with radial profile 2^{2t} t! L_t^{mu/2 + ell - 1}(|x|^2).
HermiteRecord ch_laguerre(const DunklContext& ctx, unsigned t, unsigned ell, const Polynomial& h);

// Checks the recursion between the coefficients of CH_{2t-2} and CH_{2t}
// (record_prev may be null when record.t == 0) and the internal relation
// -2(2t-2i) a_{2i} = (2i+2)(2 ell + mu + 2i) a_{2i+2} for record.
Verdict coefficient_recursions_check(const HermiteRecord* record_prev, const HermiteRecord& record);

// 2^n exp(-Delta_k/4) p for homogeneous p of degree n.
Polynomial rosler_hermite(const DunklContext& ctx, const Polynomial& p);

// Residual of (Delta_k - 2E) q + 2n q.
Polynomial eigen_residual(const DunklContext& ctx, unsigned n, const Polynomial& q);

// Verifies the eigenvalue equation for the Roesler family on the monomial
// basis of P_n, for the Clifford-Hermite family CH_{2t}(H), 2t+ell = n over
// canonical harmonic bases, and that both families and their union have rank
// dim P_n.
struct EigenspaceReport {
  Verdict verdict;
  std::size_t dim_pn = 0;
  std::size_t rank_roesler = 0;
  std::size_t rank_hermite = 0;
  std::size_t rank_union = 0;
};
EigenspaceReport eigenspace_checks(const DunklContext& ctx, unsigned n);

// The c with 2^n exp(-Delta_k/4)(|x|^{2i} H) == c * CH_{2i}(H), where H is
// harmonic of degree n - 2i. Throws PreconditionViolation if the two sides
// are not proportional.
Rational proportionality_constant(const DunklContext& ctx, unsigned i, unsigned n,
                                  const Polynomial& h);

// p e^{c|x|^2}
struct WeightedFunction {
  Polynomial polynomial_part;
  Rational gaussian_rate;
};

WeightedFunction apply_dunkl(const DunklContext& ctx, std::size_t axis, const WeightedFunction& f);
WeightedFunction apply_laplacian(const DunklContext& ctx, const WeightedFunction& f);

// For q in V_n (n = deg q): (Delta_k - |x|^2)(q e^{-|x|^2/2}) ==
// -(2n + mu) q e^{-|x|^2/2}. The eigenspace precondition is checked too.
Verdict weighted_eigenfunction_check(const DunklContext& ctx, const Polynomial& q);

}  // namespace dunkl
