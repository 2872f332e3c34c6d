#pragma once

// Hand-rolled generators for the property tests. Everything is seeded so a
// failure reproduces.

#include <random>
#include <vector>

#include "dunkl/polynomial.hpp"
#include "dunkl/rational.hpp"

namespace dunkl::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 5) {
  const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * max_num + 1)) - max_num;
  return make_rational(num, den);
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t m, unsigned degree) {
  std::vector<unsigned> e(m, 0);
  for (unsigned k = 0; k < degree; ++k) ++e[rng() % m];
  return Monomial(std::move(e));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t m, unsigned max_degree,
                                    std::size_t terms) {
  Polynomial p(m);
  for (std::size_t i = 0; i < terms; ++i)
    p.add_term(random_monomial(rng, m, static_cast<unsigned>(rng() % (max_degree + 1))),
               random_rational(rng));
  return p;
}

inline Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t m, unsigned degree,
                                     std::size_t terms) {
  Polynomial p(m);
  for (std::size_t i = 0; i < terms; ++i)
    p.add_term(random_monomial(rng, m, degree), random_rational(rng));
  return p;
}

inline Polynomial x(std::size_t m, std::size_t axis) { return Polynomial::variable(m, axis); }

inline Polynomial c(std::size_t m, const Rational& value) { return Polynomial::constant(m, value); }

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace dunkl::testing
