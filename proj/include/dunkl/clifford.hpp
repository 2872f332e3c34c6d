#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

// Basis blade e_{i1} ... e_{ir} (i1 < ... < ir) of Cl_{0,m}, stored as a
// bitmask with bit i standing for e_{i+1}.
using BladeMask = std::uint32_t;

// Sign s with e_A e_B = s e_{A xor B}, using e_i e_j = -e_j e_i (i != j) and
// e_i^2 = -1.
int blade_product_sign(BladeMask a, BladeMask b);

// Element of P (x) Cl_{0,m}: a polynomial coefficient per blade.
class CliffordPolynomial {
 public:
  using BladeMap = std::map<BladeMask, Polynomial>;

  CliffordPolynomial() = default;
  explicit CliffordPolynomial(std::size_t m);

  static CliffordPolynomial scalar(const Polynomial& p);
  static CliffordPolynomial blade(std::size_t m, BladeMask mask, const Polynomial& p);
  // The generator e_{axis+1} with coefficient 1.
  static CliffordPolynomial generator(std::size_t m, std::size_t axis);
  // x = sum_i e_i x_i
  static CliffordPolynomial vector_variable(std::size_t m);

  std::size_t dimension() const { return m_; }
  const BladeMap& blades() const { return blades_; }
  bool is_zero() const { return blades_.empty(); }
  Polynomial component(BladeMask mask) const;
  bool is_scalar() const;

  void add_to_blade(BladeMask mask, const Polynomial& p);

  CliffordPolynomial& operator+=(const CliffordPolynomial& other);
  CliffordPolynomial& operator-=(const CliffordPolynomial& other);
  CliffordPolynomial& operator*=(const Rational& c);

  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a += b;
  }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a -= b;
  }
  friend CliffordPolynomial operator*(CliffordPolynomial a, const Rational& c) {
    return a *= c;
  }
  friend CliffordPolynomial operator*(const Rational& c, CliffordPolynomial a) {
    return a *= c;
  }
  CliffordPolynomial operator-() const;

  bool operator==(const CliffordPolynomial& other) const {
    return m_ == other.m_ && blades_ == other.blades_;
  }

  std::string to_string() const;

 private:
  void require_same_dimension(const CliffordPolynomial& other, const char* op) const;

  std::size_t m_ = 0;
  BladeMap blades_;
};

CliffordPolynomial clifford_product(const CliffordPolynomial& a, const CliffordPolynomial& b);
inline CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
  return clifford_product(a, b);
}

// Applies a scalar operator to every blade coefficient.
CliffordPolynomial apply_blade_wise(const PolyOperator& op, const CliffordPolynomial& f);

// D_k F = sum_i e_i T_i F.
CliffordPolynomial dunkl_dirac(const DunklContext& ctx, const CliffordPolynomial& f);

// x F (left multiplication by the vector variable).
CliffordPolynomial vector_multiply(const CliffordPolynomial& f);

// D+ F = -D_k F + 2 x F.
CliffordPolynomial d_plus(const DunklContext& ctx, const CliffordPolynomial& f);

// Basis of {M in P_l (x) Cl_{0,m} : D_k M = 0}. Coordinates are ordered by
// blade mask, then deg-lex monomial, and the basis is the canonical rational
// nullspace in those coordinates.
std::vector<CliffordPolynomial> monogenic_basis(const DunklContext& ctx, unsigned degree);

}  // namespace dunkl
