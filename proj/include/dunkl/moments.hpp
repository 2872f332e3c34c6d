#pragma once

#include <cstddef>
#include <vector>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

// coefficient * pi^{m/2}
struct MomentValue {
  Rational coefficient;
  std::size_t dimension = 0;

  MomentValue& operator+=(const MomentValue& other);
  bool operator==(const MomentValue&) const = default;
};

// Gamma(n + 1/2) / sqrt(pi) = (2n)! / (4^n n!)
Rational half_integer_gamma(unsigned n);

// prod_i int_R x^{a_i} |x|^{2 kappa_i} e^{-x^2} dx for integer kappa_i >= 0.
MomentValue weighted_moment(const std::vector<unsigned>& exponents,
                            const std::vector<Rational>& kappa);

// int f g w_kappa e^{-|x|^2} dx for the Z2^m weight w_kappa = prod |x_i|^{2 kappa_i}.
MomentValue inner_product(const Polynomial& f, const Polynomial& g,
                          const std::vector<Rational>& kappa);

// Per-coordinate multiplicities of a Z2^m context. Throws InvalidInput if a
// root is not a coordinate direction and PreconditionViolation if some kappa
// is not a nonnegative integer.
std::vector<Rational> z2_kappas(const DunklContext& ctx);

struct HermiteLabel {
  unsigned t = 0;
  unsigned ell = 0;
  std::size_t h_index = 0;
};

struct OrthogonalityEntry {
  HermiteLabel left;
  HermiteLabel right;
  MomentValue value;
  // Distinct (t, ell): the value must be zero.
  bool asserted_zero = false;
};

struct OrthogonalityReport {
  std::size_t dimension = 0;
  std::vector<OrthogonalityEntry> entries;  // pairs with left <= right
  std::size_t violations = 0;               // asserted zeros that are not zero
  std::size_t nonpositive_diagonal = 0;     // <f, f> <= 0
};

// Pairwise inner products of CH_{2t}(H) for 2t + ell <= max_n over canonical
// harmonic bases of a Z2^m context with integer multiplicities.
OrthogonalityReport orthogonality_report(const DunklContext& ctx, unsigned max_n);

}  // namespace dunkl
