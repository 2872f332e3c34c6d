#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

class RationalMatrix;

// Exponent vector x_1^{e_1} ... x_m^{e_m}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t m) : exps_(m, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t m, std::size_t axis);

  std::size_t dimension() const { return exps_.size(); }
  unsigned degree() const;
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
};

// Degree-lexicographic order, highest first: larger total degree first, then
// lexicographically larger exponent vector first. This single ordering fixes
// matrix columns, JSON term order and canonical printing.
struct DegLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial in m variables over Q. Never stores zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, DegLexOrder>;

  Polynomial() = default;
  explicit Polynomial(std::size_t m) : m_(m) {}

  static Polynomial constant(std::size_t m, const Rational& c);
  static Polynomial variable(std::size_t m, std::size_t axis);
  static Polynomial term(const Monomial& mono, const Rational& c);

  std::size_t dimension() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // Lowest total degree present; -1 for zero.
  int low_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(unsigned d) const;
  Rational coefficient(const Monomial& mono) const;
  // Coefficient of the deg-lex leading term (zero for the zero polynomial).
  Rational leading_coefficient() const;

  // Adds c * mono in place, dropping the term if it cancels.
  void add_term(const Monomial& mono, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const {
    return m_ == other.m_ && terms_ == other.terms_;
  }

  std::string to_string() const;

 private:
  void require_same_dimension(const Polynomial& other, const char* op) const;

  std::size_t m_ = 0;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

// d/dx_axis, axis is 0-based.
Polynomial partial_derivative(std::size_t axis, const Polynomial& p);

// p(A x), expanded exactly. A must be m x m.
Polynomial compose_with_linear_map(const Polynomial& p, const RationalMatrix& a);

// <alpha, x> as a polynomial.
Polynomial linear_form(std::span<const Rational> alpha);

// The quotient q with q * <alpha, x> == p. Throws DivisionRemainder if the
// division is not exact.
Polynomial exact_divide_by_linear_form(const Polynomial& p,
                                       std::span<const Rational> alpha);

// |x|^2 = x_1^2 + ... + x_m^2.
Polynomial norm_squared(std::size_t m);

// dim P_k = C(k + m - 1, m - 1); zero for k < 0.
std::size_t dim_homogeneous(std::size_t m, int k);

// Monomials of P_k in deg-lex order (highest first).
std::vector<Monomial> monomial_basis(std::size_t m, unsigned k);
// Monomials of total degree <= k, degree k first.
std::vector<Monomial> monomial_basis_upto(std::size_t m, unsigned k);

// Graded linear operator on polynomials.
using PolyOperator = std::function<Polynomial(const Polynomial&)>;

}  // namespace dunkl
