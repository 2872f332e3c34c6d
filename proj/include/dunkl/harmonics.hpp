#pragma once

#include <cstddef>
#include <vector>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

// Canonical basis of the Dunkl harmonics H_l = P_l cap ker Delta_k.
struct HarmonicBasis {
  unsigned degree = 0;
  std::vector<Polynomial> elements;
};

HarmonicBasis harmonic_basis(const DunklContext& ctx, unsigned degree);

// Classical spherical harmonic count dim P_l - dim P_{l-2}.
std::size_t classical_harmonic_dimension(std::size_t m, unsigned degree);

// Throws PreconditionViolation when mu lies in -2N = {0, -2, -4, ...}.
void require_fischer_admissible(const Rational& mu);
bool in_minus_two_n(const Rational& mu);

// One summand |x|^{2i} H of the Fischer decomposition of a degree-k input.
struct FischerComponent {
  unsigned i = 0;
  Polynomial harmonic;   // H in H_{k-2i}
  Polynomial component;  // |x|^{2i} H
};

// Splits a homogeneous p into its summands by solving for coordinates in the
// basis {|x|^{2i} h : h in harmonic_basis(k - 2i)}. Zero summands are
// omitted.
std::vector<FischerComponent> fischer_decompose(const DunklContext& ctx, const Polynomial& p);

// The projection P_i^k as a product over l != i of
// (Delta_LB + (k-2l)(mu-2+k-2l)) / (2(i-l)(2k-2i-2l+mu-2)).
Polynomial fischer_project(const DunklContext& ctx, unsigned i, unsigned k, const Polynomial& p);

}  // namespace dunkl
