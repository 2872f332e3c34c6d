#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dunkl/polynomial.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(std::size_t rows,
                                     const std::vector<RationalVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix&) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> reduce_to_rref(RationalMatrix& a);

std::size_t rank(RationalMatrix a);

// Canonical basis of ker M: one vector per free column (deg-lex order of the
// columns), denominators cleared, content 1, first nonzero entry positive.
std::vector<RationalVector> rational_nullspace(const RationalMatrix& m);

// Coefficients c with sum_j c_j columns[j] == target, if target lies in the
// span. With linearly dependent columns the free coefficients are set to 0.
std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& columns,
                                            const RationalVector& target);

// Divide by the gcd of the numerators after clearing denominators, and make
// the first nonzero entry positive.
RationalVector primitive_part(const RationalVector& v);

// Linear map P_domain_degree -> P_codomain_degree in the deg-lex monomial
// bases of the two degrees.
struct OperatorMatrix {
  std::size_t dimension = 0;
  int domain_degree = 0;
  int codomain_degree = 0;
  RationalMatrix entries;

  Polynomial apply(const Polynomial& p) const;
};

// Coefficients of the degree-k part of p in the deg-lex basis of P_k.
RationalVector coefficient_vector(const Polynomial& p, unsigned k);
Polynomial from_coefficient_vector(std::size_t m, unsigned k, const RationalVector& v);

// Coefficients over all monomials of degree <= max_degree, in
// monomial_basis_upto order.
RationalVector coefficient_vector_upto(const Polynomial& p, unsigned max_degree);

// Materializes op on P_k. The image of every basis monomial must be
// homogeneous of one common degree; if codomain_degree is given it must be
// that degree. Zero images are compatible with any degree. When no image is
// nonzero and no degree is given the codomain defaults to k.
OperatorMatrix materialize_on_degree(std::size_t m, const PolyOperator& op, unsigned k,
                                     std::optional<int> codomain_degree = std::nullopt);

}  // namespace dunkl
