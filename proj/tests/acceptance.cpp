// Acceptance gate: one PASS/FAIL line per criterion, all checks exact.
// Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <sstream>

#include "dunkl/clifford.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/linalg.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;  // first failure

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Outcome from_suites(const std::vector<std::string>& names, const SuiteOptions& options) {
  Outcome out;
  for (const auto& name : names) {
    const auto verdict = run_suite(name, options);
    out.checks += verdict.cases;
    if (!verdict.failures.empty() && out.pass) {
      const auto& f = verdict.failures.front();
      out.pass = false;
      out.detail = name + ": " + f.check + " [" + f.group + "] " + f.degrees + " residual " +
                   f.residual.dump();
    }
  }
  return out;
}

Polynomial r2(std::size_t m) { return norm_squared(m); }

Outcome table_reproduction(const SuiteOptions& options) {
  Outcome out;
  for (const auto& rs : sample_groups(options)) {
    const DunklContext ctx(rs);
    const std::size_t m = rs.dimension();
    const Polynomial one = Polynomial::constant(m, 1);
    for (unsigned ell = 0; ell <= options.max_ell; ++ell) {
      const Rational s = 2 * static_cast<long>(ell) + rs.mu();
      const Polynomial rows[3] = {
          one,
          Rational(-4) * r2(m) + Rational(2 * s) * one,
          Rational(16) * pow(r2(m), 2) - Rational(16 * (s + 2)) * r2(m) +
              Rational(4 * (s + 2) * s) * one};
      for (const auto& h : harmonic_basis(ctx, ell).elements)
        for (unsigned t = 0; t <= 2; ++t)
          out.expect(ch_recursion(ctx, t, h).polynomial == rows[t] * h,
                     rs.label() + " t=" + std::to_string(t) + " ell=" + std::to_string(ell) +
                         " H=" + h.to_string());
    }
  }
  return out;
}

std::vector<RationalVector> coordinates(const std::vector<Polynomial>& family, unsigned n) {
  std::vector<RationalVector> cols;
  for (const auto& p : family) cols.push_back(coefficient_vector_upto(p, n));
  return cols;
}

Outcome roesler_vs_hermite(const SuiteOptions& options) {
  Outcome out;
  for (const auto& rs : sample_groups(options)) {
    const DunklContext ctx(rs);
    const std::size_t m = rs.dimension();
    for (unsigned n = 0; n <= options.proportional_max_n; ++n) {
      std::vector<Polynomial> roesler, hermite;
      for (unsigned i = 0; 2 * i <= n; ++i) {
        std::optional<Rational> first;
        for (const auto& h : harmonic_basis(ctx, n - 2 * i).elements) {
          const std::string where = rs.label() + " n=" + std::to_string(n) + " i=" +
                                    std::to_string(i) + " H=" + h.to_string();
          const Polynomial w = rosler_hermite(ctx, pow(r2(m), i) * h);
          const Polynomial v = ch_recursion(ctx, i, h).polynomial;
          roesler.push_back(w);
          hermite.push_back(v);
          try {
            const Rational c = proportionality_constant(ctx, i, n, h);
            out.expect(w == v * c, where + " proportional");
            if (!first) first = c;
            out.expect(c == *first, where + " constant independent of H");
            if (i == 1 && n == 2) out.expect(c == -1, where + " constant equals -1");
          } catch (const PreconditionViolation& e) {
            out.expect(false, where + ": " + e.what());
          }
        }
      }
      const std::size_t dim = dim_homogeneous(m, static_cast<int>(n));
      const auto rank_w = rank(RationalMatrix::from_columns(
          monomial_basis_upto(m, n).size(), coordinates(roesler, n)));
      const auto rank_v = rank(RationalMatrix::from_columns(
          monomial_basis_upto(m, n).size(), coordinates(hermite, n)));
      out.expect(rank_w == dim && rank_v == dim,
                 rs.label() + " n=" + std::to_string(n) + " ranks " + std::to_string(rank_w) +
                     "/" + std::to_string(rank_v) + " vs dim " + std::to_string(dim));
    }
  }
  return out;
}

// The classical table CH_t(M) as a Clifford polynomial in x, t <= 4.
CliffordPolynomial classical(unsigned t, unsigned k, std::size_t m) {
  const auto x = CliffordPolynomial::vector_variable(m);
  const auto one = CliffordPolynomial::scalar(Polynomial::constant(m, 1));
  const Rational s = 2 * static_cast<long>(k) + static_cast<long>(m);
  const auto x2 = x * x;
  switch (t) {
    case 0: return one;
    case 1: return Rational(2) * x;
    case 2: return Rational(4) * x2 + Rational(2 * s) * one;
    case 3: return Rational(8) * (x2 * x) + Rational(4 * (s + 2)) * x;
    default:
      return Rational(16) * (x2 * x2) + Rational(16 * (s + 2)) * x2 +
             Rational(4 * (s + 2) * s) * one;
  }
}

Outcome classical_reduction(const SuiteOptions& options) {
  Outcome out;
  for (std::size_t m = 2; m <= 3; ++m) {
    const DunklContext ctx(builtin_root_system(RootFamily::Z2, m, {Rational(0)}));
    for (unsigned ell = 0; ell <= options.classical_max_ell; ++ell)
      for (const auto& h : harmonic_basis(ctx, ell).elements)
        for (unsigned t = 0; t <= 2; ++t)
          out.expect(CliffordPolynomial::scalar(ch_recursion(ctx, t, h).polynomial) ==
                         classical(2 * t, ell, m) * CliffordPolynomial::scalar(h),
                     "m=" + std::to_string(m) + " CH_" + std::to_string(2 * t) + " H=" + h.to_string());
    for (unsigned ell = 0; ell <= options.monogenic_max_ell; ++ell)
      for (const auto& mono : monogenic_basis(ctx, ell)) {
        CliffordPolynomial power = mono;
        for (unsigned t = 1; t <= 4; ++t) {
          power = d_plus(ctx, power);
          out.expect(power == classical(t, ell, m) * mono,
                     "m=" + std::to_string(m) + " D+^" + std::to_string(t) + " M=" + mono.to_string());
        }
      }
  }
  return out;
}

}  // namespace

int main() {
  const SuiteOptions desk = SuiteOptions::from_profile(Profile::Desk);
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "low-order table reproduced by the recursion (t = 0, 1, 2)",
       [&] { return table_reproduction(desk); }},
      {2, "recursion = Rodrigues = Laguerre on all sampled groups",
       [&] { return from_suites({"hermite-eq"}, desk); }},
      {3, "operator identities (commutativity, sl2, radial Laplacian, anticommutator, D+^2, D_k^2)",
       [&] {
         return from_suites({"commute", "sl2", "lemma1", "anticommutator", "dplus2", "dirac-square"},
                            desk);
       }},
      {4, "eigen-structure (Hermite ODE, Roesler eigenspaces, weighted eigenfunctions, Delta_LB)",
       [&] { return from_suites({"diffeq", "roesler"}, desk); }},
      {5, "Fischer projections, reassembly and harmonic dimensions",
       [&] { return from_suites({"fischer"}, desk); }},
      {6, "Roesler and Clifford-Hermite families proportional elementwise, constant -1 at n = 2",
       [&] { return roesler_vs_hermite(desk); }},
      {7, "exact orthogonality on Z2^m, m <= 2, kappa in {0,1,2}",
       [&] { return from_suites({"orthogonality"}, desk); }},
      {8, "classical reduction at kappa = 0, including odd D+ powers",
       [&] { return classical_reduction(desk); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
         << o.checks << " checks)";
    if (!o.pass) line << "\n     first failure: " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
