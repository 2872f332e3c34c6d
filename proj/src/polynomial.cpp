#include "dunkl/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/linalg.hpp"

namespace dunkl {

Monomial Monomial::unit(std::size_t m, std::size_t axis) {
  Monomial mono(m);
  mono.exps_[axis] = 1;
  return mono;
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool DegLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return b.exponents() < a.exponents();
}

Polynomial Polynomial::constant(std::size_t m, const Rational& c) {
  Polynomial p(m);
  p.add_term(Monomial(m), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t m, std::size_t axis) {
  if (axis >= m)
    throw InvalidInput("axis " + std::to_string(axis) + " out of range for dimension " +
                       std::to_string(m));
  Polynomial p(m);
  p.add_term(Monomial::unit(m, axis), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& mono, const Rational& c) {
  Polynomial p(mono.dimension());
  p.add_term(mono, c);
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::low_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

bool Polynomial::is_homogeneous() const { return degree() == low_degree(); }

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial out(m_);
  for (const auto& [mono, c] : terms_)
    if (mono.degree() == d) out.terms_.emplace_hint(out.terms_.end(), mono, c);
  return out;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (mono.dimension() != m_)
    throw InvalidInput("monomial of dimension " + std::to_string(mono.dimension()) +
                       " added to polynomial of dimension " + std::to_string(m_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_dimension(const Polynomial& other, const char* op) const {
  if (m_ != other.m_)
    throw InvalidInput(std::string("dimension mismatch in ") + op + ": " +
                       std::to_string(m_) + " vs " + std::to_string(other.m_));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dimension(other, "addition");
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dimension(other, "subtraction");
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [mono, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_dimension(b, "multiplication");
  Polynomial out(a.m_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = mono.degree() == 0;
    if (constant || mag != 1) {
      os << mag.get_str();
      if (!constant) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < mono.dimension(); ++i) {
      if (mono[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (i + 1);
      if (mono[i] > 1) os << "^" << mono[i];
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.dimension(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(std::size_t axis, const Polynomial& p) {
  if (axis >= p.dimension())
    throw InvalidInput("axis " + std::to_string(axis) + " out of range for dimension " +
                       std::to_string(p.dimension()));
  Polynomial out(p.dimension());
  for (const auto& [mono, c] : p.terms()) {
    if (mono[axis] == 0) continue;
    Monomial lowered(mono);
    lowered[axis] -= 1;
    out.add_term(lowered, c * mono[axis]);
  }
  return out;
}

namespace {

// For a matrix with exactly one entry of +-1 per row and per column, the
// variable x_i is sent to sign[i] * x_{target[i]}.
bool as_signed_permutation(const RationalMatrix& a, std::vector<std::size_t>& target,
                           std::vector<int>& sign) {
  const std::size_t m = a.rows();
  target.assign(m, 0);
  sign.assign(m, 0);
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    int found = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& v = a(i, j);
      if (v == 0) continue;
      if ((v != 1 && v != -1) || ++found > 1 || used[j]) return false;
      target[i] = j;
      sign[i] = v > 0 ? 1 : -1;
    }
    if (found != 1) return false;
    used[target[i]] = true;
  }
  return true;
}

}  // namespace

Polynomial compose_with_linear_map(const Polynomial& p, const RationalMatrix& a) {
  const std::size_t m = p.dimension();
  if (a.rows() != m || a.cols() != m)
    throw InvalidInput("linear map of shape " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " composed with polynomial of dimension " +
                       std::to_string(m));
  Polynomial out(m);
  std::vector<std::size_t> target;
  std::vector<int> sign;
  if (as_signed_permutation(a, target, sign)) {
    for (const auto& [mono, c] : p.terms()) {
      Monomial image(m);
      bool negative = false;
      for (std::size_t i = 0; i < m; ++i) {
        image[target[i]] += mono[i];
        if (sign[i] < 0 && (mono[i] & 1u)) negative = !negative;
      }
      out.add_term(image, negative ? Rational(-c) : c);
    }
    return out;
  }

  // (A x)_i = sum_j A_ij x_j; cache its powers as they are needed.
  std::vector<std::vector<Polynomial>> powers(m);
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial row(m);
    for (std::size_t j = 0; j < m; ++j) row.add_term(Monomial::unit(m, j), a(i, j));
    powers[i].push_back(Polynomial::constant(m, 1));
    powers[i].push_back(std::move(row));
  }
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };
  for (const auto& [mono, c] : p.terms()) {
    Polynomial prod = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < m; ++i)
      if (mono[i] > 0) prod = prod * power(i, mono[i]);
    out += prod;
  }
  return out;
}

Polynomial linear_form(std::span<const Rational> alpha) {
  const std::size_t m = alpha.size();
  Polynomial out(m);
  for (std::size_t i = 0; i < m; ++i) out.add_term(Monomial::unit(m, i), alpha[i]);
  return out;
}

Polynomial exact_divide_by_linear_form(const Polynomial& p,
                                       std::span<const Rational> alpha) {
  const std::size_t m = p.dimension();
  if (alpha.size() != m)
    throw InvalidInput("linear form of dimension " + std::to_string(alpha.size()) +
                       " divides polynomial of dimension " + std::to_string(m));
  const auto pivot_it = std::find_if(alpha.begin(), alpha.end(),
                                     [](const Rational& a) { return a != 0; });
  if (pivot_it == alpha.end()) throw InvalidInput("division by the zero linear form");
  if (p.is_zero()) return Polynomial(m);
  const auto j = static_cast<std::size_t>(pivot_it - alpha.begin());

  // Write p = sum_k c_k x_j^k and <alpha,x> = alpha_j x_j + rest, then run
  // synthetic division in x_j with coefficients in the other variables.
  unsigned top = 0;
  for (const auto& [mono, c] : p.terms()) top = std::max(top, mono[j]);
  std::vector<Polynomial> coeffs(top + 1, Polynomial(m));
  for (const auto& [mono, c] : p.terms()) {
    Monomial stripped(mono);
    stripped[j] = 0;
    coeffs[mono[j]].add_term(stripped, c);
  }
  Polynomial rest(m);
  for (std::size_t i = 0; i < m; ++i)
    if (i != j) rest.add_term(Monomial::unit(m, i), alpha[i]);
  const Rational inv_pivot = 1 / alpha[j];

  Polynomial quotient(m);
  Polynomial carry = std::move(coeffs[top]);
  for (unsigned k = top; k >= 1; --k) {
    // q_{k-1} = (c_k - rest * q_k) / alpha_j, with carry = c_k - rest * q_k.
    Polynomial q = carry * inv_pivot;
    for (const auto& [mono, c] : q.terms()) {
      Monomial lifted(mono);
      lifted[j] = k - 1;
      quotient.add_term(lifted, c);
    }
    carry = coeffs[k - 1] - rest * q;
  }
  if (!carry.is_zero())
    throw DivisionRemainder("polynomial " + p.to_string() + " is not divisible by " +
                            linear_form(alpha).to_string() + " (remainder " +
                            carry.to_string() + ")");
  return quotient;
}

Polynomial norm_squared(std::size_t m) {
  Polynomial out(m);
  for (std::size_t i = 0; i < m; ++i) {
    Monomial mono(m);
    mono[i] = 2;
    out.add_term(mono, 1);
  }
  return out;
}

std::size_t dim_homogeneous(std::size_t m, int k) {
  if (k < 0) return 0;
  if (m == 0) return k == 0 ? 1 : 0;
  return binomial(static_cast<unsigned>(k + m - 1), static_cast<unsigned>(m - 1)).get_ui();
}

namespace {

void fill_basis(std::size_t axis, unsigned remaining, Monomial& current,
                std::vector<Monomial>& out) {
  const std::size_t m = current.dimension();
  if (axis + 1 == m) {
    current[axis] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[axis] = e;
    fill_basis(axis + 1, remaining - e, current, out);
  }
  current[axis] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t m, unsigned k) {
  std::vector<Monomial> out;
  if (m == 0) {
    if (k == 0) out.emplace_back(0);
    return out;
  }
  out.reserve(dim_homogeneous(m, static_cast<int>(k)));
  Monomial current(m);
  fill_basis(0, k, current, out);
  return out;
}

std::vector<Monomial> monomial_basis_upto(std::size_t m, unsigned k) {
  std::vector<Monomial> out;
  for (unsigned d = k + 1; d-- > 0;) {
    auto layer = monomial_basis(m, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace dunkl
