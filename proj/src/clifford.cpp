#include "dunkl/clifford.hpp"

#include <bit>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/linalg.hpp"

namespace dunkl {

int blade_product_sign(BladeMask a, BladeMask b) {
  // Moving each generator of b left past the larger generators of a costs one
  // sign flip per transposition; shared generators then square to -1.
  unsigned swaps = 0;
  for (BladeMask rest = b; rest != 0; rest &= rest - 1) {
    const BladeMask bit = rest & (~rest + 1);
    swaps += static_cast<unsigned>(std::popcount(a & ~((bit << 1) - 1)));
  }
  swaps += static_cast<unsigned>(std::popcount(a & b));
  return (swaps & 1u) ? -1 : 1;
}

CliffordPolynomial::CliffordPolynomial(std::size_t m) : m_(m) {
  if (m > 31) throw InvalidInput("Clifford algebra dimension " + std::to_string(m) + " too large");
}

CliffordPolynomial CliffordPolynomial::scalar(const Polynomial& p) {
  return blade(p.dimension(), 0, p);
}

CliffordPolynomial CliffordPolynomial::blade(std::size_t m, BladeMask mask, const Polynomial& p) {
  CliffordPolynomial out(m);
  out.add_to_blade(mask, p);
  return out;
}

CliffordPolynomial CliffordPolynomial::generator(std::size_t m, std::size_t axis) {
  return blade(m, BladeMask{1} << axis, Polynomial::constant(m, 1));
}

CliffordPolynomial CliffordPolynomial::vector_variable(std::size_t m) {
  CliffordPolynomial out(m);
  for (std::size_t i = 0; i < m; ++i)
    out.add_to_blade(BladeMask{1} << i, Polynomial::variable(m, i));
  return out;
}

Polynomial CliffordPolynomial::component(BladeMask mask) const {
  const auto it = blades_.find(mask);
  return it == blades_.end() ? Polynomial(m_) : it->second;
}

bool CliffordPolynomial::is_scalar() const {
  return blades_.empty() || (blades_.size() == 1 && blades_.begin()->first == 0);
}

void CliffordPolynomial::add_to_blade(BladeMask mask, const Polynomial& p) {
  if (p.dimension() != m_)
    throw InvalidInput("polynomial of dimension " + std::to_string(p.dimension()) +
                       " added to Clifford polynomial of dimension " + std::to_string(m_));
  if (m_ < 32 && (mask >> m_) != 0)
    throw InvalidInput("blade mask " + std::to_string(mask) + " out of range for m=" +
                       std::to_string(m_));
  if (p.is_zero()) return;
  auto [it, inserted] = blades_.try_emplace(mask, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) blades_.erase(it);
  }
}

void CliffordPolynomial::require_same_dimension(const CliffordPolynomial& other,
                                                const char* op) const {
  if (m_ != other.m_)
    throw InvalidInput(std::string("dimension mismatch in Clifford ") + op + ": " +
                       std::to_string(m_) + " vs " + std::to_string(other.m_));
}

CliffordPolynomial& CliffordPolynomial::operator+=(const CliffordPolynomial& other) {
  require_same_dimension(other, "addition");
  for (const auto& [mask, p] : other.blades_) add_to_blade(mask, p);
  return *this;
}

CliffordPolynomial& CliffordPolynomial::operator-=(const CliffordPolynomial& other) {
  require_same_dimension(other, "subtraction");
  for (const auto& [mask, p] : other.blades_) add_to_blade(mask, -p);
  return *this;
}

CliffordPolynomial& CliffordPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    blades_.clear();
  } else {
    for (auto& [mask, p] : blades_) p *= c;
  }
  return *this;
}

CliffordPolynomial CliffordPolynomial::operator-() const {
  CliffordPolynomial out(*this);
  for (auto& [mask, p] : out.blades_) p = -p;
  return out;
}

std::string CliffordPolynomial::to_string() const {
  if (blades_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, p] : blades_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")";
    if (mask == 0) continue;
    os << "*e";
    for (std::size_t i = 0; i < m_; ++i)
      if (mask & (BladeMask{1} << i)) os << (i + 1);
  }
  return os.str();
}

CliffordPolynomial clifford_product(const CliffordPolynomial& a, const CliffordPolynomial& b) {
  if (a.dimension() != b.dimension())
    throw InvalidInput("dimension mismatch in Clifford product: " +
                       std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()));
  CliffordPolynomial out(a.dimension());
  for (const auto& [ma, pa] : a.blades())
    for (const auto& [mb, pb] : b.blades()) {
      Polynomial prod = pa * pb;
      if (blade_product_sign(ma, mb) < 0) prod = -prod;
      out.add_to_blade(ma ^ mb, prod);
    }
  return out;
}

CliffordPolynomial apply_blade_wise(const PolyOperator& op, const CliffordPolynomial& f) {
  CliffordPolynomial out(f.dimension());
  for (const auto& [mask, p] : f.blades()) out.add_to_blade(mask, op(p));
  return out;
}

CliffordPolynomial dunkl_dirac(const DunklContext& ctx, const CliffordPolynomial& f) {
  const std::size_t m = f.dimension();
  if (m != ctx.dimension())
    throw InvalidInput("Clifford polynomial of dimension " + std::to_string(m) +
                       " used with a root system of dimension " +
                       std::to_string(ctx.dimension()));
  CliffordPolynomial out(m);
  for (const auto& [mask, p] : f.blades()) {
    const auto grad = dunkl_gradient(ctx, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (grad[i].is_zero()) continue;
      const BladeMask gen = BladeMask{1} << i;
      out.add_to_blade(gen ^ mask, blade_product_sign(gen, mask) < 0 ? -grad[i] : grad[i]);
    }
  }
  return out;
}

CliffordPolynomial vector_multiply(const CliffordPolynomial& f) {
  const std::size_t m = f.dimension();
  CliffordPolynomial out(m);
  for (const auto& [mask, p] : f.blades())
    for (std::size_t i = 0; i < m; ++i) {
      const BladeMask gen = BladeMask{1} << i;
      const Polynomial xp = Polynomial::variable(m, i) * p;
      out.add_to_blade(gen ^ mask, blade_product_sign(gen, mask) < 0 ? -xp : xp);
    }
  return out;
}

CliffordPolynomial d_plus(const DunklContext& ctx, const CliffordPolynomial& f) {
  return vector_multiply(f) * Rational(2) - dunkl_dirac(ctx, f);
}

std::vector<CliffordPolynomial> monogenic_basis(const DunklContext& ctx, unsigned degree) {
  const std::size_t m = ctx.dimension();
  const BladeMask blade_count = BladeMask{1} << m;
  const auto domain = monomial_basis(m, degree);
  const std::size_t target_dim = dim_homogeneous(m, static_cast<int>(degree) - 1);
  const std::size_t cols = static_cast<std::size_t>(blade_count) * domain.size();
  RationalMatrix mat(static_cast<std::size_t>(blade_count) * target_dim, cols);
  if (target_dim > 0) {
    for (BladeMask mask = 0; mask < blade_count; ++mask)
      for (std::size_t j = 0; j < domain.size(); ++j) {
        const auto image =
            dunkl_dirac(ctx, CliffordPolynomial::blade(m, mask, Polynomial::term(domain[j], 1)));
        const std::size_t col = mask * domain.size() + j;
        for (const auto& [out_mask, p] : image.blades()) {
          const auto v = coefficient_vector(p, degree - 1);
          for (std::size_t r = 0; r < target_dim; ++r)
            if (v[r] != 0) mat(out_mask * target_dim + r, col) = v[r];
        }
      }
  }
  std::vector<CliffordPolynomial> basis;
  for (const auto& v : rational_nullspace(mat)) {
    CliffordPolynomial element(m);
    for (BladeMask mask = 0; mask < blade_count; ++mask) {
      Polynomial p(m);
      for (std::size_t j = 0; j < domain.size(); ++j)
        p.add_term(domain[j], v[mask * domain.size() + j]);
      element.add_to_blade(mask, p);
    }
    basis.push_back(std::move(element));
  }
  return basis;
}

}  // namespace dunkl
