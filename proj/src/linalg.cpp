#include "dunkl/linalg.hpp"

#include <algorithm>
#include <map>

#include "dunkl/errors.hpp"

namespace dunkl {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<RationalVector>& columns) {
  RationalMatrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw InvalidInput("column " + std::to_string(c) + " has length " +
                         std::to_string(columns[c].size()) + ", expected " +
                         std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_)
    throw InvalidInput("matrix with " + std::to_string(cols_) +
                       " columns applied to vector of length " + std::to_string(v.size()));
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_)
    throw InvalidInput("matrix product shape mismatch: " + std::to_string(cols_) + " vs " +
                       std::to_string(other.rows_));
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out(r, c) += (*this)(r, k) * other(k, c);
    }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

std::vector<std::size_t> reduce_to_rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) swap(a(sel, c), a(row, c));
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix a) { return reduce_to_rref(a).size(); }

RationalVector primitive_part(const RationalVector& v) {
  Integer lcm_den = 1;
  for (const auto& q : v)
    if (q != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  Integer content = 0;
  for (const auto& q : v)
    if (q != 0) {
      Integer n = q.get_num() * (lcm_den / q.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
  RationalVector out(v.size());
  if (content == 0) return out;
  const auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
  Rational scale(lcm_den, content);
  scale.canonicalize();
  if (*first < 0) scale = -scale;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * scale;
  return out;
}

std::vector<RationalVector> rational_nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = reduce_to_rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(primitive_part(v));
  }
  return basis;
}

std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& columns,
                                            const RationalVector& target) {
  const std::size_t rows = target.size();
  RationalMatrix aug(rows, columns.size() + 1);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw InvalidInput("solve_in_span: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) aug(r, c) = columns[c][r];
  }
  for (std::size_t r = 0; r < rows; ++r) aug(r, columns.size()) = target[r];
  const auto pivots = reduce_to_rref(aug);
  RationalVector coeffs(columns.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == columns.size()) return std::nullopt;
    coeffs[pivots[r]] = aug(r, columns.size());
  }
  return coeffs;
}

Polynomial OperatorMatrix::apply(const Polynomial& p) const {
  if (p.dimension() != dimension)
    throw InvalidInput("operator matrix of dimension " + std::to_string(dimension) +
                       " applied to polynomial of dimension " +
                       std::to_string(p.dimension()));
  const auto v = coefficient_vector(p, static_cast<unsigned>(domain_degree));
  if (codomain_degree < 0) return Polynomial(dimension);
  return from_coefficient_vector(dimension, static_cast<unsigned>(codomain_degree),
                                 entries * v);
}

namespace {

std::map<Monomial, std::size_t, DegLexOrder> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t, DegLexOrder> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  return index;
}

}  // namespace

RationalVector coefficient_vector(const Polynomial& p, unsigned k) {
  const auto basis = monomial_basis(p.dimension(), k);
  RationalVector v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = p.coefficient(basis[i]);
  return v;
}

Polynomial from_coefficient_vector(std::size_t m, unsigned k, const RationalVector& v) {
  const auto basis = monomial_basis(m, k);
  if (v.size() != basis.size())
    throw InvalidInput("coefficient vector of length " + std::to_string(v.size()) +
                       " for P_" + std::to_string(k) + " of dimension " +
                       std::to_string(basis.size()));
  Polynomial p(m);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

RationalVector coefficient_vector_upto(const Polynomial& p, unsigned max_degree) {
  const auto basis = monomial_basis_upto(p.dimension(), max_degree);
  const auto index = index_of(basis);
  RationalVector v(basis.size());
  for (const auto& [mono, c] : p.terms()) {
    const auto it = index.find(mono);
    if (it == index.end())
      throw InvalidInput("polynomial of degree " + std::to_string(p.degree()) +
                         " exceeds coefficient range " + std::to_string(max_degree));
    v[it->second] = c;
  }
  return v;
}

OperatorMatrix materialize_on_degree(std::size_t m, const PolyOperator& op, unsigned k,
                                     std::optional<int> codomain_degree) {
  const auto basis = monomial_basis(m, k);
  std::vector<Polynomial> images;
  images.reserve(basis.size());
  std::optional<int> degree = codomain_degree;
  for (const auto& mono : basis) {
    Polynomial image = op(Polynomial::term(mono, 1));
    if (!image.is_zero()) {
      if (!image.is_homogeneous() || (degree && *degree != image.degree())) {
        std::string name = Polynomial::term(mono, 1).to_string();
        throw InvalidInput("operator is not degree-homogeneous on P_" + std::to_string(k) +
                           ": image of " + name + " is " + image.to_string());
      }
      degree = image.degree();
    }
    images.push_back(std::move(image));
  }
  OperatorMatrix out;
  out.dimension = m;
  out.domain_degree = static_cast<int>(k);
  out.codomain_degree = degree.value_or(static_cast<int>(k));
  const auto rows = dim_homogeneous(m, out.codomain_degree);
  out.entries = RationalMatrix(rows, basis.size());
  if (rows == 0) return out;
  const auto target = monomial_basis(m, static_cast<unsigned>(out.codomain_degree));
  const auto index = index_of(target);
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [mono, coeff] : images[c].terms()) out.entries(index.at(mono), c) = coeff;
  return out;
}

}  // namespace dunkl
