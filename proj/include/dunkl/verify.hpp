#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dunkl/json_io.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

enum class Profile { Desk, Ci };

Profile parse_profile(const std::string& name);

// Size caps for the verification sweeps. from_profile() gives the defaults;
// individual fields may be overridden afterwards.
struct SuiteOptions {
  unsigned max_deg = 6;           // monomial degree for operator identities
  unsigned clifford_max_deg = 5;  // monomial degree for Clifford identities
  unsigned kappa_draws = 5;       // random multiplicities per group
  unsigned max_t = 3;             // Hermite index
  unsigned max_ell = 3;           // harmonic degree for Hermite checks
  unsigned lemma_max_s = 3;
  unsigned lemma_max_ell = 4;
  unsigned fischer_max_k = 6;
  unsigned roesler_max_n = 5;
  unsigned proportional_max_n = 4;
  unsigned heat_max_deg = 8;
  unsigned orthogonality_max_n = 5;
  unsigned classical_max_ell = 3;
  unsigned monogenic_max_ell = 2;
  std::uint64_t seed = 24301;
  // Test fixture: perturbs the coefficient recursion used by hermite-eq.
  bool inject_fault = false;

  static SuiteOptions from_profile(Profile profile);
};

struct SuiteFailure {
  std::string group;
  std::vector<std::string> kappa;
  std::string check;
  std::string degrees;
  Json residual;  // exact polynomial (or Clifford polynomial)
};

struct SuiteVerdict {
  std::string suite;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  double wall_time_s = 0;
};

// commute, sl2, lemma1, anticommutator, dplus2, dirac-square, fischer,
// hermite-eq, diffeq, roesler, orthogonality, classical.
const std::vector<std::string>& suite_names();

// Runs one named suite; throws InvalidInput for an unknown name.
SuiteVerdict run_suite(const std::string& name, const SuiteOptions& options);

// The groups every seeded sweep covers: Z2^1, Z2^2, A_2 in R^3 and B_2, each
// with kappa_draws multiplicity draws in [0, 3].
std::vector<RootSystem> sample_groups(const SuiteOptions& options);

// Deterministic rational in [0, 3] with denominator at most 6.
Rational draw_kappa(std::mt19937_64& rng);

// Number of worker threads: DUNKL_NUM_THREADS if set, else the hardware
// concurrency.
std::size_t worker_count();

// include_timing adds "wall_time_s", which makes output nondeterministic.
Json to_json(const SuiteVerdict& verdict, bool include_timing);

}  // namespace dunkl
