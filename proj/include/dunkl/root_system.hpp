#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/linalg.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

enum class RootFamily { Z2, A, B, D };

// Parses "z2", "a", "b", "d" (case-insensitive).
RootFamily parse_root_family(const std::string& name);
std::string to_string(RootFamily family);

// A reduced root system given by a positive half R+, with a multiplicity
// kappa per positive root that is constant on orbits of the reflection group.
//
// Roots keep whatever rational scaling they were given: the reflection r_a
// and the Dunkl operators are invariant under a -> c*a, so the usual
// normalization <a,a> = 2 is not imposed.
class RootSystem {
 public:
  std::size_t dimension() const { return m_; }
  const std::vector<RationalVector>& positive_roots() const { return roots_; }
  const RationalVector& multiplicities() const { return kappa_; }
  // Partition of root indices into orbits, ordered by their first root.
  const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }
  // Sum of kappa over R+.
  const Rational& gamma() const { return gamma_; }
  // Dunkl dimension m + 2 gamma.
  const Rational& mu() const { return mu_; }
  const std::string& label() const { return label_; }

  // Kappa for each orbit, in orbit order.
  RationalVector orbit_multiplicities() const;

  friend RootSystem builtin_root_system(RootFamily, std::size_t, const RationalVector&);
  friend RootSystem custom_root_system(std::vector<RationalVector>, RationalVector,
                                       std::string);

 private:
  RootSystem() = default;

  std::size_t m_ = 0;
  std::vector<RationalVector> roots_;
  RationalVector kappa_;
  std::vector<std::vector<std::size_t>> orbits_;
  Rational gamma_;
  Rational mu_;
  std::string label_;
};

// Z2^m: {e_i}; A_{m-1} realized in R^m: {e_i - e_j}; B_m: {e_i} then
// {e_i +- e_j}; D_m: {e_i +- e_j}. kappa holds one nonnegative value per
// orbit (Z2^m also accepts a single value for all coordinates).
RootSystem builtin_root_system(RootFamily family, std::size_t m, const RationalVector& kappa);

// Validates reducedness, closure under the reflections of the roots and
// orbit-constancy of kappa (one value per root).
RootSystem custom_root_system(std::vector<RationalVector> positive_roots,
                              RationalVector multiplicities, std::string label = "custom");

// Variant used by the JSON loader: kappa given per orbit representative; the
// representative may be any root up to sign.
RootSystem custom_root_system_by_orbit(
    std::vector<RationalVector> positive_roots,
    const std::vector<std::pair<RationalVector, Rational>>& orbit_kappas,
    std::string label = "custom");

RationalMatrix reflection_matrix(const RationalVector& alpha);

// r_alpha(v) = v - 2 <alpha,v>/<alpha,alpha> alpha
RationalVector reflect(const RationalVector& alpha, const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

// Orbits of the root set under the group generated by its reflections,
// computed as the closure of root-on-root reflections up to sign.
std::vector<std::vector<std::size_t>> orbit_decomposition(
    const std::vector<RationalVector>& positive_roots);
std::vector<std::vector<std::size_t>> orbit_decomposition(const RootSystem& rs);

}  // namespace dunkl
