#include "dunkl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <thread>

#include "dunkl/clifford.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/moments.hpp"

namespace dunkl {

Profile parse_profile(const std::string& name) {
  if (name == "desk") return Profile::Desk;
  if (name == "ci") return Profile::Ci;
  throw InvalidInput("unknown profile \"" + name + "\" (expected desk or ci)");
}

SuiteOptions SuiteOptions::from_profile(Profile profile) {
  SuiteOptions o;
  if (profile == Profile::Ci) {
    o.max_deg = 4;
    o.clifford_max_deg = 3;
    o.kappa_draws = 2;
    o.max_t = 2;
    o.max_ell = 2;
    o.lemma_max_s = 2;
    o.lemma_max_ell = 3;
    o.fischer_max_k = 4;
    o.roesler_max_n = 3;
    o.proportional_max_n = 3;
    o.heat_max_deg = 6;
    o.orthogonality_max_n = 3;
    o.classical_max_ell = 2;
    o.monogenic_max_ell = 1;
  }
  return o;
}

Rational draw_kappa(std::mt19937_64& rng) {
  // Plain modular reduction keeps the stream identical across standard
  // libraries, unlike std::uniform_int_distribution.
  const long den = 1 + static_cast<long>(rng() % 6);
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(3 * den + 1));
  return make_rational(num, den);
}

std::vector<RootSystem> sample_groups(const SuiteOptions& options) {
  struct Sample {
    RootFamily family;
    std::size_t m;
    std::size_t kappas;
  };
  const Sample samples[] = {{RootFamily::Z2, 1, 1},
                          {RootFamily::Z2, 2, 2},
                          {RootFamily::A, 3, 1},
                        {RootFamily::B, 2, 2}};
  std::mt19937_64 rng(options.seed);
  std::vector<RootSystem> out;
  for (const auto& sample : samples)
    for (unsigned d = 0; d < options.kappa_draws; ++d) {
      RationalVector kappa;
      for (std::size_t i = 0; i < sample.kappas; ++i) kappa.push_back(draw_kappa(rng));
      out.push_back(builtin_root_system(sample.family, sample.m, kappa));
    }
  return out;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("DUNKL_NUM_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct CaseResult {
  std::size_t checks = 0;
  std::vector<SuiteFailure> failures;
};

using Case = std::function<CaseResult()>;
using ContextPtr = std::shared_ptr<const DunklContext>;

std::vector<std::string> kappa_strings(const RootSystem& rs) {
  std::vector<std::string> out;
  for (const auto& k : rs.orbit_multiplicities()) out.push_back(to_string(k));
  return out;
}

// Collects the checks of one case against a fixed group.
class Recorder {
 public:
  explicit Recorder(const RootSystem& rs) : rs_(rs) {}

  void zero(const std::string& check, const std::string& degrees, const Polynomial& residual) {
    ++result_.checks;
    if (!residual.is_zero()) fail(check, degrees, to_json(residual));
  }

  void zero(const std::string& check, const std::string& degrees,
            const CliffordPolynomial& residual) {
    ++result_.checks;
    if (!residual.is_zero()) fail(check, degrees, to_json(residual));
  }

  void require(bool ok, const std::string& check, const std::string& degrees, Json detail) {
    ++result_.checks;
    if (!ok) fail(check, degrees, std::move(detail));
  }

  void absorb(const Verdict& verdict, const std::string& degrees) {
    result_.checks += verdict.checks;
    for (const auto& f : verdict.failures) fail(f.label, degrees, to_json(f.value));
  }

  void fail(const std::string& check, const std::string& degrees, Json residual) {
    result_.failures.push_back({rs_.label(), kappa_strings(rs_), check, degrees, std::move(residual)});
  }

  CaseResult take() { return std::move(result_); }

 private:
  const RootSystem& rs_;
  CaseResult result_;
};

// Wraps a case body so that a library error becomes a reported failure
// rather than aborting the sweep.
Case guarded(ContextPtr ctx, std::string what, std::function<void(Recorder&)> body) {
  return [ctx = std::move(ctx), what = std::move(what), body = std::move(body)]() {
    Recorder rec(ctx->root_system());
    try {
      body(rec);
    } catch (const Error& e) {
      rec.require(false, what, "", Json{{"error", e.what()}});
    }
    return rec.take();
  };
}

std::vector<CaseResult> run_cases(const std::vector<Case>& cases) {
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = cases[i]();
  };
  const std::size_t n = std::min(worker_count(), cases.size());
  if (n <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

std::vector<ContextPtr> sample_contexts(const SuiteOptions& options) {
  std::vector<ContextPtr> out;
  for (auto& rs : sample_groups(options)) out.push_back(std::make_shared<DunklContext>(std::move(rs)));
  return out;
}

std::string mono_name(const Monomial& mono) { return Polynomial::term(mono, 1).to_string(); }

std::string tl(unsigned t, unsigned ell, std::size_t h) {
  return "t=" + std::to_string(t) + ",ell=" + std::to_string(ell) + ",h=" + std::to_string(h);
}

Polynomial r2_power(std::size_t m, unsigned s) { return pow(norm_squared(m), s); }

// ---------------------------------------------------------------- commute

std::vector<Case> commute_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (auto& ctx : sample_contexts(o)) {
    const std::size_t m = ctx->dimension();
    if (m < 2) continue;
    for (unsigned d = 0; d <= o.max_deg; ++d)
      cases.push_back(guarded(ctx, "commute", [ctx, m, d](Recorder& rec) {
        for (const auto& mono : monomial_basis(m, d)) {
          const auto grad = dunkl_gradient(*ctx, Polynomial::term(mono, 1));
          std::vector<std::vector<Polynomial>> second;
          for (const auto& g : grad) second.push_back(dunkl_gradient(*ctx, g));
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
              rec.zero("T" + std::to_string(j + 1) + "T" + std::to_string(i + 1) + " - T" +
                           std::to_string(i + 1) + "T" + std::to_string(j + 1),
                       mono_name(mono), second[i][j] - second[j][i]);
        }
      }));
  }
  return cases;
}

// ---------------------------------------------------------------- sl2

std::vector<Case> sl2_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (auto& ctx : sample_contexts(o)) {
    const std::size_t m = ctx->dimension();
    for (unsigned d = 0; d <= o.max_deg; ++d)
      cases.push_back(guarded(ctx, "sl2", [ctx, m, d](Recorder& rec) {
        const auto& c = *ctx;
        auto E = [&](const Polynomial& f) { return sl2_apply(c, Sl2::E, f); };
        auto F = [&](const Polynomial& f) { return sl2_apply(c, Sl2::F, f); };
        auto H = [&](const Polynomial& f) { return sl2_apply(c, Sl2::H, f); };
        for (const auto& mono : monomial_basis(m, d)) {
          const Polynomial f = Polynomial::term(mono, 1);
          const std::string name = mono_name(mono);
          rec.zero("[H,E] - 2E", name, H(E(f)) - E(H(f)) - Rational(2) * E(f));
          rec.zero("[H,F] + 2F", name, H(F(f)) - F(H(f)) + Rational(2) * F(f));
          rec.zero("[E,F] - H", name, E(F(f)) - F(E(f)) - H(f));
          rec.zero("[Delta_LB, |x|^2]", name,
                   laplace_beltrami(c, r2_multiply(f)) - r2_multiply(laplace_beltrami(c, f)));
        }
      }));
  }
  return cases;
}

// ---------------------------------------------------------------- lemma1

std::vector<Case> lemma1_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (auto& ctx : sample_contexts(o)) {
    const std::size_t m = ctx->dimension();
    for (unsigned ell = 0; ell <= o.lemma_max_ell; ++ell)
      cases.push_back(guarded(ctx, "lemma1", [ctx, m, ell, max_s = o.lemma_max_s](Recorder& rec) {
        const auto& c = *ctx;
        std::vector<std::pair<std::string, Polynomial>> inputs;
        const auto basis = harmonic_basis(c, ell);
        for (std::size_t h = 0; h < basis.elements.size(); ++h)
          inputs.emplace_back("harmonic " + std::to_string(h), basis.elements[h]);
        for (const auto& mono : monomial_basis(m, ell))
          inputs.emplace_back(mono_name(mono), Polynomial::term(mono, 1));
        for (const auto& [name, r] : inputs) {
          const Polynomial lap_r = dunkl_laplacian(c, r);
          for (unsigned s = 1; s <= max_s; ++s) {
            const Rational factor = Rational(2 * s) * (Rational(2 * ell) + c.mu() + 2 * s - 2);
            const Polynomial lhs = dunkl_laplacian(c, r2_power(m, s) * r);
            const Polynomial rhs = factor * (r2_power(m, s - 1) * r) + r2_power(m, s) * lap_r;
            rec.zero("Delta_k(|x|^2s R) expansion",
                     name + ",s=" + std::to_string(s) + ",ell=" + std::to_string(ell), lhs - rhs);
          }
        }
      }));
  }
  return cases;
}

// ---------------------------------------------------------------- Clifford

std::vector<Case> clifford_cases(
    const SuiteOptions& o, const std::string& what,
    std::function<void(const DunklContext&, const CliffordPolynomial&, const std::string&,
                       Recorder&)>
        check) {
  std::vector<Case> cases;
  for (auto& ctx : sample_contexts(o)) {
    const std::size_t m = ctx->dimension();
    for (unsigned d = 0; d <= o.clifford_max_deg; ++d)
      cases.push_back(guarded(ctx, what, [ctx, m, d, check](Recorder& rec) {
        for (BladeMask mask = 0; mask < (BladeMask{1} << m); ++mask)
          for (const auto& mono : monomial_basis(m, d)) {
            const auto f = CliffordPolynomial::blade(m, mask, Polynomial::term(mono, 1));
            check(*ctx, f, mono_name(mono) + " e" + std::to_string(mask), rec);
          }
      }));
  }
  return cases;
}

std::vector<Case> anticommutator_cases(const SuiteOptions& o) {
  return clifford_cases(o, "anticommutator", [](const DunklContext& c, const CliffordPolynomial& f,
                                                const std::string& name, Recorder& rec) {
    const auto lhs = dunkl_dirac(c, vector_multiply(f)) + vector_multiply(dunkl_dirac(c, f));
    const auto rhs = apply_blade_wise(
        [&](const Polynomial& p) { return Rational(-2) * euler_apply(p) - c.mu() * p; }, f);
    rec.zero("{D_k, x} + (2E + mu)", name, lhs - rhs);
  });
}

std::vector<Case> dirac_square_cases(const SuiteOptions& o) {
  return clifford_cases(o, "dirac-square", [](const DunklContext& c, const CliffordPolynomial& f,
                                              const std::string& name, Recorder& rec) {
    const auto lap = apply_blade_wise([&](const Polynomial& p) { return dunkl_laplacian(c, p); }, f);
    rec.zero("D_k^2 + Delta_k", name, dunkl_dirac(c, dunkl_dirac(c, f)) + lap);
  });
}

std::vector<Case> dplus2_cases(const SuiteOptions& o) {
  auto cases = clifford_cases(o, "dplus2", [](const DunklContext& c, const CliffordPolynomial& f,
                                              const std::string& name, Recorder& rec) {
    const auto scalar =
        apply_blade_wise([&](const Polynomial& p) { return d_plus_squared(c, p); }, f);
    rec.zero("D+^2 - scalar expansion", name, d_plus(c, d_plus(c, f)) - scalar);
  });
  // The scalar expansion against the Gaussian-conjugated Laplacian at c = -1.
  for (auto& ctx : sample_contexts(o)) {
    const std::size_t m = ctx->dimension();
    cases.push_back(guarded(ctx, "dplus2", [ctx, m, d = o.max_deg](Recorder& rec) {
      for (const auto& mono : monomial_basis_upto(m, d)) {
        const Polynomial f = Polynomial::term(mono, 1);
        rec.zero("D+^2 + e^{|x|^2} Delta_k e^{-|x|^2}", mono_name(mono),
                 d_plus_squared(*ctx, f) + gaussian_conjugated_laplacian(*ctx, Rational(-1), f));
      }
    }));
  }
  return cases;
}

// ---------------------------------------------------------------- fischer

Polynomial column_polynomial(std::size_t m, int degree, const RationalMatrix& a, std::size_t col) {
  RationalVector v(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) v[r] = a(r, col);
  return from_coefficient_vector(m, static_cast<unsigned>(degree), v);
}

// Reports every nonzero column of a matrix identity residual on P_k.
void matrix_zero(Recorder& rec, const std::string& check, std::size_t m, unsigned k,
                 const RationalMatrix& residual) {
  const auto basis = monomial_basis(m, k);
  for (std::size_t c = 0; c < basis.size(); ++c)
    rec.zero(check, "k=" + std::to_string(k) + "," + mono_name(basis[c]),
             column_polynomial(m, static_cast<int>(k), residual, c));
}

std::vector<Case> fischer_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (auto& ctx : sample_contexts(o)) {
    const std::size_t m = ctx->dimension();
    for (unsigned k = 0; k <= o.fischer_max_k; ++k)
      cases.push_back(guarded(ctx, "fischer", [ctx, m, k](Recorder& rec) {
        const auto& c = *ctx;
        const std::size_t dim = dim_homogeneous(m, static_cast<int>(k));
        std::vector<RationalMatrix> proj;
        for (unsigned i = 0; 2 * i <= k; ++i)
          proj.push_back(materialize_on_degree(
                             m, [&](const Polynomial& p) { return fischer_project(c, i, k, p); }, k,
                             static_cast<int>(k))
                             .entries);

        RationalMatrix sum(dim, dim);
        for (const auto& p : proj)
          for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t col = 0; col < dim; ++col) sum(r, col) += p(r, col);
        RationalMatrix id = RationalMatrix::identity(dim);
        RationalMatrix diff(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t col = 0; col < dim; ++col) diff(r, col) = sum(r, col) - id(r, col);
        matrix_zero(rec, "sum of projections - id", m, k, diff);

        for (std::size_t i = 0; i < proj.size(); ++i)
          for (std::size_t j = 0; j < proj.size(); ++j) {
            RationalMatrix prod = proj[i] * proj[j];
            if (i == j)
              for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t col = 0; col < dim; ++col) prod(r, col) -= proj[i](r, col);
            matrix_zero(rec, "P_" + std::to_string(i) + " P_" + std::to_string(j) +
                                 (i == j ? " - P_" + std::to_string(i) : ""),
                        m, k, prod);
          }

        rec.require(harmonic_basis(c, k).elements.size() == classical_harmonic_dimension(m, k),
                    "dim H_ell equals classical count", "ell=" + std::to_string(k),
                    Json{{"computed", harmonic_basis(c, k).elements.size()},
                         {"classical", classical_harmonic_dimension(m, k)}});

        for (const auto& mono : monomial_basis(m, k)) {
          const Polynomial p = Polynomial::term(mono, 1);
          const std::string name = "k=" + std::to_string(k) + "," + mono_name(mono);
          const auto components = fischer_decompose(c, p);
          std::map<unsigned, Polynomial> by_i;
          Polynomial total(m);
          for (const auto& comp : components) {
            by_i.emplace(comp.i, comp.component);
            total += comp.component;
            rec.zero("component harmonic", name + ",i=" + std::to_string(comp.i),
                     dunkl_laplacian(c, comp.harmonic));
            rec.zero("component form", name + ",i=" + std::to_string(comp.i),
                     comp.component - r2_power(m, comp.i) * comp.harmonic);
            const int j = static_cast<int>(k) - 2 * static_cast<int>(comp.i);
            const Rational eigen = -Rational(j) * (c.mu() - 2 + j);
            rec.zero("Delta_LB eigenvalue on component", name + ",i=" + std::to_string(comp.i),
                     laplace_beltrami(c, comp.component) - eigen * comp.component);
          }
          rec.zero("components reassemble input", name, total - p);
          for (unsigned i = 0; 2 * i <= k; ++i) {
            const auto it = by_i.find(i);
            const Polynomial expected = it == by_i.end() ? Polynomial(m) : it->second;
            rec.zero("projection agrees with decomposition", name + ",i=" + std::to_string(i),
                     fischer_project(c, i, k, p) - expected);
          }
        }
      }));
  }
  return cases;
}

// ---------------------------------------------------------------- hermite-eq

// The three-term step between consecutive coefficient rows, with an optional
// off-by-one in the first factor used as a harness self-test.
RationalVector step_coefficients(const RationalVector& prev, unsigned ell, const Rational& mu,
                                 bool fault) {
  const std::size_t t = prev.size();
  auto a = [&](long i) { return i < 0 || i >= static_cast<long>(prev.size()) ? Rational(0) : prev[i]; };
  RationalVector next(t + 1);
  for (long i = 0; i <= static_cast<long>(t); ++i) {
    const Rational first = Rational(2 * i + (fault ? 3 : 2)) * (Rational(2 * ell) + mu + 2 * i);
    next[i] = -first * a(i + 1) + Rational(2) * (Rational(2 * ell + 4 * i) + mu) * a(i) -
              Rational(4) * a(i - 1);
  }
  return next;
}

// Explicit low-degree table of CH_{2t}(H) as radial coefficients.
RationalVector table_row(unsigned t, unsigned ell, const Rational& mu) {
  const Rational s = Rational(2 * ell) + mu;
  switch (t) {
    case 0: return {Rational(1)};
    case 1: return {Rational(2) * s, Rational(-4)};
    case 2: return {Rational(4) * (s + 2) * s, Rational(-16) * (s + 2), Rational(16)};
  }
  throw InvalidInput("no explicit table row for t = " + std::to_string(t));
}

std::vector<Case> hermite_eq_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (auto& ctx : sample_contexts(o)) {
    for (unsigned ell = 0; ell <= o.max_ell; ++ell)
      cases.push_back(guarded(ctx, "hermite-eq", [ctx, ell, o](Recorder& rec) {
        const auto& c = *ctx;
        const auto basis = harmonic_basis(c, ell);
        for (std::size_t h = 0; h < basis.elements.size(); ++h) {
          const Polynomial& harm = basis.elements[h];
          std::optional<HermiteRecord> prev;
          for (unsigned t = 0; t <= o.max_t; ++t) {
            const std::string name = tl(t, ell, h);
            const HermiteRecord rec_r = ch_recursion(c, t, harm);
            const HermiteRecord rec_d = ch_rodrigues(c, t, harm);
            const HermiteRecord rec_l = ch_laguerre(c, t, ell, harm);
            rec.zero("recursion - Rodrigues", name, rec_r.polynomial - rec_d.polynomial);
            rec.zero("recursion - Laguerre", name, rec_r.polynomial - rec_l.polynomial);
            rec.require(rec_r.radial_coeffs == rec_d.radial_coeffs &&
                            rec_r.radial_coeffs == rec_l.radial_coeffs,
                        "radial coefficients agree", name,
                        Json{{"recursion", to_json(rec_r.radial_coeffs)},
                             {"rodrigues", to_json(rec_d.radial_coeffs)},
                             {"laguerre", to_json(rec_l.radial_coeffs)}});
            if (t <= 2)
              rec.zero("explicit table", name,
                       rec_r.polynomial - assemble_radial(table_row(t, ell, c.mu()), harm));
            rec.absorb(coefficient_recursions_check(prev ? &*prev : nullptr, rec_r), name);
            if (o.inject_fault && prev) {
              const auto predicted = step_coefficients(prev->radial_coeffs, ell, c.mu(), true);
              RationalVector diff(predicted.size());
              for (std::size_t i = 0; i < diff.size(); ++i)
                diff[i] = rec_r.radial_coeffs[i] - predicted[i];
              rec.zero("step recursion (injected fault)", name, assemble_radial(diff, harm));
            }
            prev = rec_r;
          }
        }
      }));
  }
  return cases;
}

// ---------------------------------------------------------------- diffeq

std::vector<Case> diffeq_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (auto& ctx : sample_contexts(o)) {
    const std::size_t m = ctx->dimension();
    for (unsigned ell = 0; ell <= o.max_ell; ++ell)
      cases.push_back(guarded(ctx, "diffeq", [ctx, m, ell, max_t = o.max_t](Recorder& rec) {
        const auto& c = *ctx;
        const Rational lb = -Rational(ell) * (c.mu() - 2 + ell);
        const auto basis = harmonic_basis(c, ell);
        for (std::size_t h = 0; h < basis.elements.size(); ++h)
          for (unsigned t = 0; t <= max_t; ++t) {
            const std::string name = tl(t, ell, h);
            const HermiteRecord r = ch_recursion(c, t, basis.elements[h]);
            rec.zero("(Delta_k - 2E) CH + 2n CH", name, eigen_residual(c, 2 * t + ell, r.polynomial));
            rec.zero("Delta_LB eigenvalue on CH", name,
                     laplace_beltrami(c, r.polynomial) - lb * r.polynomial);
            for (unsigned i = 0; i <= t; ++i) {
              const Polynomial summand =
                  r.radial_coeffs[i] * (r2_power(m, i) * basis.elements[h]);
              rec.zero("Delta_LB eigenvalue on summand", name + ",i=" + std::to_string(i),
                       laplace_beltrami(c, summand) - lb * summand);
            }
            rec.absorb(weighted_eigenfunction_check(c, r.polynomial), name);
          }
      }));
    for (unsigned n = 0; n <= o.roesler_max_n; ++n)
      cases.push_back(guarded(ctx, "diffeq", [ctx, m, n](Recorder& rec) {
        for (const auto& mono : monomial_basis(m, n))
          rec.absorb(weighted_eigenfunction_check(*ctx, rosler_hermite(*ctx, Polynomial::term(mono, 1))),
                     "Roesler " + mono_name(mono));
      }));
  }
  return cases;
}

// ---------------------------------------------------------------- roesler

std::vector<Case> roesler_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (auto& ctx : sample_contexts(o)) {
    const std::size_t m = ctx->dimension();
    for (unsigned n = 0; n <= o.roesler_max_n; ++n)
      cases.push_back(guarded(ctx, "roesler", [ctx, n](Recorder& rec) {
        const auto report = eigenspace_checks(*ctx, n);
        const std::string name = "n=" + std::to_string(n);
        rec.absorb(report.verdict, name);
        rec.require(report.rank_roesler == report.dim_pn && report.rank_hermite == report.dim_pn &&
                        report.rank_union == report.dim_pn,
                    "W_n and V_n span P_n", name,
                    Json{{"dim_pn", report.dim_pn},
                         {"rank_roesler", report.rank_roesler},
                         {"rank_hermite", report.rank_hermite},
                         {"rank_union", report.rank_union}});
      }));
    for (unsigned n = 0; n <= o.proportional_max_n; ++n)
      cases.push_back(guarded(ctx, "roesler", [ctx, n](Recorder& rec) {
        for (unsigned i = 0; 2 * i <= n; ++i) {
          const auto basis = harmonic_basis(*ctx, n - 2 * i);
          std::optional<Rational> first;
          for (std::size_t h = 0; h < basis.elements.size(); ++h) {
            const std::string name = "n=" + std::to_string(n) + ",i=" + std::to_string(i) +
                                     ",h=" + std::to_string(h);
            Rational constant;
            try {
              constant = proportionality_constant(*ctx, i, n, basis.elements[h]);
            } catch (const PreconditionViolation& e) {
              rec.require(false, "Roesler proportional to CH", name, Json{{"error", e.what()}});
              continue;
            }
            rec.require(true, "Roesler proportional to CH", name, Json());
            if (!first) first = constant;
            rec.require(constant == *first, "constant independent of harmonic", name,
                        Json{{"first", to_string(*first)}, {"this", to_string(constant)}});
            if (i == 1 && n == 2)
              rec.require(constant == -1, "constant for |x|^2 equals -1", name,
                          Json{{"constant", to_string(constant)}});
          }
        }
      }));
    cases.push_back(guarded(ctx, "roesler", [ctx, m, d = o.heat_max_deg](Recorder& rec) {
      for (const auto& mono : monomial_basis_upto(m, d)) {
        const Polynomial p = Polynomial::term(mono, 1);
        const Polynomial forward = heat_semigroup(*ctx, p);
        const unsigned deg = mono.degree();
        rec.require(forward.degree() == static_cast<int>(deg), "heat semigroup keeps degree",
                    mono_name(mono), to_json(forward));
        rec.zero("heat semigroup top part", mono_name(mono), forward.homogeneous_part(deg) - p);
        rec.zero("heat semigroup inverse", mono_name(mono),
                 heat_semigroup(*ctx, forward, Rational(1, 4)) - p);
      }
    }));
  }
  return cases;
}

// ---------------------------------------------------------------- orthogonality

std::vector<Case> orthogonality_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (std::size_t m = 1; m <= 2; ++m) {
    const std::size_t count = m == 1 ? 3 : 9;
    for (std::size_t idx = 0; idx < count; ++idx) {
      RationalVector kappa;
      for (std::size_t i = 0, rest = idx; i < m; ++i, rest /= 3) kappa.push_back(Rational(long(rest % 3)));
      auto ctx = std::make_shared<DunklContext>(builtin_root_system(RootFamily::Z2, m, kappa));
      cases.push_back(guarded(ctx, "orthogonality", [ctx, n = o.orthogonality_max_n](Recorder& rec) {
        const auto report = orthogonality_report(*ctx, n);
        for (const auto& e : report.entries) {
          const std::string name = "(" + tl(e.left.t, e.left.ell, e.left.h_index) + ") vs (" +
                                   tl(e.right.t, e.right.ell, e.right.h_index) + ")";
          const Json value{{"value_coeff", to_string(e.value.coefficient)},
                           {"pi_power", to_string(make_rational(long(e.value.dimension), 2))}};
          if (e.asserted_zero)
            rec.require(e.value.coefficient == 0, "distinct (t, ell) orthogonal", name, value);
          const bool diagonal = e.left.t == e.right.t && e.left.ell == e.right.ell &&
                                e.left.h_index == e.right.h_index;
          if (diagonal) rec.require(e.value.coefficient > 0, "norm positive", name, value);
        }
      }));
    }
  }
  return cases;
}

// ---------------------------------------------------------------- classical

// Clifford form of the classical table: CH_t(M) as a polynomial in x.
CliffordPolynomial classical_row(unsigned t, unsigned ell, std::size_t m) {
  const auto x = CliffordPolynomial::vector_variable(m);
  auto one = CliffordPolynomial::scalar(Polynomial::constant(m, 1));
  const Rational s = Rational(2 * ell + m);
  switch (t) {
    case 0: return one;
    case 1: return Rational(2) * x;
    case 2: return Rational(4) * (x * x) + Rational(2) * s * one;
    case 3: return Rational(8) * (x * x * x) + Rational(4) * (s + 2) * x;
    case 4:
      return Rational(16) * (x * x * x * x) + Rational(16) * (s + 2) * (x * x) +
             Rational(4) * (s + 2) * s * one;
  }
  throw InvalidInput("no classical table row for t = " + std::to_string(t));
}

std::vector<Case> classical_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (std::size_t m = 2; m <= 3; ++m) {
    auto ctx = std::make_shared<DunklContext>(
        builtin_root_system(RootFamily::Z2, m, RationalVector{Rational(0)}));
    for (unsigned ell = 0; ell <= o.classical_max_ell; ++ell)
      cases.push_back(guarded(ctx, "classical", [ctx, m, ell](Recorder& rec) {
        const auto basis = harmonic_basis(*ctx, ell);
        for (std::size_t h = 0; h < basis.elements.size(); ++h)
          for (unsigned t = 0; t <= 2; ++t) {
            const auto scalar = CliffordPolynomial::scalar(basis.elements[h]);
            const auto expected = classical_row(2 * t, ell, m) * scalar;
            const auto got = CliffordPolynomial::scalar(ch_recursion(*ctx, t, basis.elements[h]).polynomial);
            rec.zero("CH on harmonic vs classical table", tl(t, ell, h), got - expected);
          }
      }));
    for (unsigned ell = 0; ell <= o.monogenic_max_ell; ++ell)
      cases.push_back(guarded(ctx, "classical", [ctx, m, ell](Recorder& rec) {
        const auto basis = monogenic_basis(*ctx, ell);
        for (std::size_t b = 0; b < basis.size(); ++b) {
          CliffordPolynomial power = basis[b];
          for (unsigned t = 1; t <= 4; ++t) {
            power = d_plus(*ctx, power);
            rec.zero("D+^t M vs classical table",
                     "t=" + std::to_string(t) + ",ell=" + std::to_string(ell) + ",M=" +
                         std::to_string(b),
                     power - classical_row(t, ell, m) * basis[b]);
          }
        }
      }));
  }
  return cases;
}

using CaseBuilder = std::vector<Case> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, CaseBuilder>>& registry() {
  static const std::vector<std::pair<std::string, CaseBuilder>> suites = {
      {"commute", commute_cases},
      {"sl2", sl2_cases},
      {"lemma1", lemma1_cases},
      {"anticommutator", anticommutator_cases},
      {"dplus2", dplus2_cases},
      {"dirac-square", dirac_square_cases},
      {"fischer", fischer_cases},
      {"hermite-eq", hermite_eq_cases},
      {"diffeq", diffeq_cases},
      {"roesler", roesler_cases},
      {"orthogonality", orthogonality_cases},
      {"classical", classical_cases},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, builder] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteVerdict run_suite(const std::string& name, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Case> cases;
  if (name == "all") {
    for (const auto& [suite, builder] : registry()) {
      auto more = builder(options);
      std::move(more.begin(), more.end(), std::back_inserter(cases));
    }
  } else {
    const auto it = std::find_if(registry().begin(), registry().end(),
                                 [&](const auto& entry) { return entry.first == name; });
    if (it == registry().end()) throw InvalidInput("unknown suite \"" + name + "\"");
    cases = it->second(options);
  }
  SuiteVerdict verdict;
  verdict.suite = name;
  for (auto& result : run_cases(cases)) {
    verdict.cases += result.checks;
    std::move(result.failures.begin(), result.failures.end(), std::back_inserter(verdict.failures));
  }
  verdict.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

Json to_json(const SuiteVerdict& verdict, bool include_timing) {
  Json failures = Json::array();
  for (const auto& f : verdict.failures)
    failures.push_back(Json{{"group", f.group},
                            {"kappa", f.kappa},
                            {"degrees", f.degrees},
                            {"check", f.check},
                            {"residual", f.residual}});
  Json out{{"suite", verdict.suite},
           {"cases", verdict.cases},
           {"failure_count", verdict.failures.size()},
           {"failures", std::move(failures)}};
  if (include_timing) out["wall_time_s"] = verdict.wall_time_s;
  return out;
}

}  // namespace dunkl
