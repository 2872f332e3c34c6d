#include "dunkl/moments.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/hermite.hpp"

namespace dunkl {

MomentValue& MomentValue::operator+=(const MomentValue& other) {
  if (dimension != other.dimension)
    throw InvalidInput("adding moments of dimension " + std::to_string(dimension) + " and " +
                       std::to_string(other.dimension));
  coefficient += other.coefficient;
  return *this;
}

Rational half_integer_gamma(unsigned n) {
  Integer four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  Rational g(factorial(2 * n), four_n * factorial(n));
  g.canonicalize();
  return g;
}

namespace {

unsigned integer_kappa(const Rational& k) {
  if (!is_integer(k) || k < 0)
    throw PreconditionViolation("weighted moments need nonnegative integer multiplicities, got " +
                                to_string(k));
  return static_cast<unsigned>(k.get_num().get_ui());
}

}  // namespace

MomentValue weighted_moment(const std::vector<unsigned>& exponents,
                            const std::vector<Rational>& kappa) {
  if (exponents.size() != kappa.size())
    throw InvalidInput("moment exponents of length " + std::to_string(exponents.size()) +
                       " with " + std::to_string(kappa.size()) + " multiplicities");
  MomentValue value{Rational(1), exponents.size()};
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const unsigned k = integer_kappa(kappa[i]);
    if (exponents[i] % 2) {
      value.coefficient = 0;
      continue;
    }
    value.coefficient *= half_integer_gamma(exponents[i] / 2 + k);
  }
  return value;
}

MomentValue inner_product(const Polynomial& f, const Polynomial& g,
                          const std::vector<Rational>& kappa) {
  MomentValue total{Rational(0), f.dimension()};
  const Polynomial product = f * g;
  for (const auto& [mono, c] : product.terms()) {
    MomentValue term = weighted_moment(mono.exponents(), kappa);
    term.coefficient *= c;
    total += term;
  }
  return total;
}

std::vector<Rational> z2_kappas(const DunklContext& ctx) {
  const auto& rs = ctx.root_system();
  std::vector<Rational> kappa(rs.dimension());
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    const auto& root = rs.positive_roots()[r];
    std::size_t nonzero = 0;
    std::size_t axis = 0;
    for (std::size_t i = 0; i < root.size(); ++i)
      if (root[i] != 0) {
        ++nonzero;
        axis = i;
      }
    if (nonzero != 1)
      throw InvalidInput("orthogonality needs a Z2^m root system; the weight of " +
                         rs.label() + " does not factor over coordinates");
    kappa[axis] = rs.multiplicities()[r];
  }
  for (const auto& k : kappa) integer_kappa(k);
  return kappa;
}

OrthogonalityReport orthogonality_report(const DunklContext& ctx, unsigned max_n) {
  const auto kappa = z2_kappas(ctx);
  struct Member {
    HermiteLabel label;
    Polynomial poly;
  };
  std::vector<Member> family;
  for (unsigned n = 0; n <= max_n; ++n)
    for (unsigned t = 0; 2 * t <= n; ++t) {
      const unsigned ell = n - 2 * t;
      const auto basis = harmonic_basis(ctx, ell);
      for (std::size_t h = 0; h < basis.elements.size(); ++h)
        family.push_back({{t, ell, h}, ch_recursion(ctx, t, basis.elements[h]).polynomial});
    }

  OrthogonalityReport report;
  report.dimension = ctx.dimension();
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a; b < family.size(); ++b) {
      OrthogonalityEntry e;
      e.left = family[a].label;
      e.right = family[b].label;
      e.value = inner_product(family[a].poly, family[b].poly, kappa);
      e.asserted_zero = e.left.t != e.right.t || e.left.ell != e.right.ell;
      if (e.asserted_zero && e.value.coefficient != 0) ++report.violations;
      if (a == b && e.value.coefficient <= 0) ++report.nonpositive_diagonal;
      report.entries.push_back(std::move(e));
    }
  return report;
}

}  // namespace dunkl
