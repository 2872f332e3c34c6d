#include "dunkl/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/json_io.hpp"
#include "dunkl/moments.hpp"
#include "dunkl/verify.hpp"

namespace dunkl {

namespace {

struct GroupArgs {
  std::string family;
  std::size_t m = 0;
  std::string kappa;
  std::string file;
};

void add_group_options(CLI::App* cmd, GroupArgs& g) {
  auto* family = cmd->add_option("--group", g.family, "root system family: z2, a, b or d");
  auto* file = cmd->add_option("--group-file", g.file, "JSON root system file");
  cmd->add_option("--m", g.m, "ambient dimension")->needs(family);
  cmd->add_option("--kappa", g.kappa, "comma-separated multiplicities, one per orbit")
      ->needs(family);
  family->excludes(file);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

// Zero multiplicities, one per orbit, for --group without --kappa.
RationalVector default_kappa(RootFamily family, std::size_t m) {
  const std::size_t orbits = family == RootFamily::B || (family == RootFamily::D && m == 2) ? 2 : 1;
  return RationalVector(orbits, Rational(0));
}

RootSystem build_group(const GroupArgs& g) {
  if (!g.file.empty()) return root_system_from_json(read_json_file(g.file));
  if (g.family.empty()) throw CLI::RequiredError("--group or --group-file");
  if (g.m == 0) throw CLI::RequiredError("--m");
  const RootFamily family = parse_root_family(g.family);
  const RationalVector kappa = g.kappa.empty() ? default_kappa(family, g.m) : parse_rational_list(g.kappa);
  return builtin_root_system(family, g.m, kappa);
}

std::string pretty_group(const Json& j) {
  std::ostringstream os;
  os << "group " << j["label"].get<std::string>() << "\n";
  os << "  m      = " << j["m"] << "\n";
  for (const auto& orbit : j["orbits"]) {
    os << "  orbit kappa = " << orbit["kappa"].get<std::string>() << ":";
    for (const auto& r : orbit["roots"]) {
      os << " (";
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i].get<std::string>();
      os << ")";
    }
    os << "\n";
  }
  os << "  gamma  = " << j["gamma"].get<std::string>() << "\n";
  os << "  mu     = " << j["mu"].get<std::string>() << "\n";
  return os.str();
}

std::string pretty_record(const HermiteRecord& r, const std::string& construction) {
  std::ostringstream os;
  os << "CH_" << 2 * r.t << "(H), ell = " << r.ell << ", mu = " << to_string(r.mu) << " ["
     << construction << "]\n";
  os << "  H      = " << r.harmonic.to_string() << "\n";
  os << "  radial =";
  for (std::size_t i = 0; i < r.radial_coeffs.size(); ++i)
    os << (i ? " + " : " ") << "(" << to_string(r.radial_coeffs[i]) << ")|x|^" << 2 * i;
  os << "\n  CH     = " << r.polynomial.to_string() << "\n";
  return os.str();
}

std::string pretty_verdict(const SuiteVerdict& v) {
  std::ostringstream os;
  os << v.suite << ": " << v.cases << " checks, " << v.failures.size() << " failures\n";
  for (const auto& f : v.failures) {
    os << "  FAIL " << f.check << " [" << f.group << ", kappa";
    for (const auto& k : f.kappa) os << " " << k;
    os << "] " << f.degrees << "\n    residual " << f.residual.dump() << "\n";
  }
  return os.str();
}

struct Options {
  bool pretty = false;
};

int cmd_group_info(const GroupArgs& g, const Options& opt, std::ostream& out) {
  const Json j = to_json(build_group(g));
  out << (opt.pretty ? pretty_group(j) : j.dump(2) + "\n");
  return kExitOk;
}

struct HermiteArgs {
  unsigned t = 0;
  unsigned ell = 0;
  std::size_t h_index = 0;
  std::string construction = "recursion";
};

int cmd_hermite(const GroupArgs& g, const HermiteArgs& a, const Options& opt, std::ostream& out) {
  const DunklContext ctx(build_group(g));
  const auto basis = harmonic_basis(ctx, a.ell);
  if (a.h_index >= basis.elements.size())
    throw InvalidInput("harmonic index " + std::to_string(a.h_index) + " out of range: H_" +
                       std::to_string(a.ell) + " has dimension " +
                       std::to_string(basis.elements.size()));
  const Polynomial& h = basis.elements[a.h_index];
  auto build = [&](const std::string& which) {
    if (which == "recursion") return ch_recursion(ctx, a.t, h);
    if (which == "rodrigues") return ch_rodrigues(ctx, a.t, h);
    return ch_laguerre(ctx, a.t, a.ell, h);
  };
  if (a.construction != "all") {
    const auto rec = build(a.construction);
    out << (opt.pretty ? pretty_record(rec, a.construction) : to_json(rec).dump(2) + "\n");
    return kExitOk;
  }
  const auto rec = build("recursion");
  const auto rod = build("rodrigues");
  const auto lag = build("laguerre");
  const bool agree = rec.polynomial == rod.polynomial && rec.polynomial == lag.polynomial &&
                     rec.radial_coeffs == rod.radial_coeffs &&
                     rec.radial_coeffs == lag.radial_coeffs;
  if (opt.pretty) {
    out << pretty_record(rec, "recursion") << pretty_record(rod, "rodrigues")
        << pretty_record(lag, "laguerre") << "agree: " << (agree ? "yes" : "no") << "\n";
  } else {
    const Json j{{"recursion", to_json(rec)},
                 {"rodrigues", to_json(rod)},
                 {"laguerre", to_json(lag)},
                 {"agree", agree}};
    out << j.dump(2) << "\n";
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

struct DecomposeArgs {
  std::string poly;
  std::string poly_file;
};

int cmd_decompose(const GroupArgs& g, const DecomposeArgs& a, const Options& opt,
                  std::ostream& out) {
  const DunklContext ctx(build_group(g));
  if (a.poly.empty() == a.poly_file.empty())
    throw CLI::ValidationError("decompose", "give exactly one of --poly and --poly-file");
  const Polynomial p = polynomial_from_json(a.poly.empty() ? read_json_file(a.poly_file)
                                                           : parse_json_text(a.poly));
  if (p.dimension() != ctx.dimension())
    throw InvalidInput("polynomial of dimension " + std::to_string(p.dimension()) +
                       " with a root system of dimension " + std::to_string(ctx.dimension()));
  const auto components = fischer_decompose(ctx, p);
  if (opt.pretty) {
    out << "mu = " << to_string(ctx.mu()) << ", " << components.size() << " components\n";
    for (const auto& c : components)
      out << "  i = " << c.i << ": |x|^" << 2 * c.i << " * (" << c.harmonic.to_string() << ")\n";
  } else {
    out << to_json(components).dump(2) << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<unsigned> max_deg;
  std::optional<std::uint64_t> seed;
  std::string profile = "desk";
  bool timing = false;
  bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& a, const Options& opt, std::ostream& out) {
  SuiteOptions options = SuiteOptions::from_profile(parse_profile(a.profile));
  if (a.max_deg) {
    options.max_deg = *a.max_deg;
    options.clifford_max_deg = std::min(options.clifford_max_deg, *a.max_deg);
  }
  if (a.seed) options.seed = *a.seed;
  options.inject_fault = a.inject_fault;

  std::vector<std::string> names;
  if (a.suite == "all")
    names = suite_names();
  else
    names.push_back(a.suite);

  std::vector<SuiteVerdict> verdicts;
  for (const auto& name : names) verdicts.push_back(run_suite(name, options));

  std::size_t failures = 0;
  std::size_t cases = 0;
  double wall = 0;
  for (const auto& v : verdicts) {
    failures += v.failures.size();
    cases += v.cases;
    wall += v.wall_time_s;
  }

  if (opt.pretty) {
    for (const auto& v : verdicts) out << pretty_verdict(v);
    if (verdicts.size() > 1) out << "total: " << cases << " checks, " << failures << " failures\n";
    if (a.timing) out << "wall time " << wall << " s\n";
  } else if (verdicts.size() == 1) {
    out << to_json(verdicts.front(), a.timing).dump(2) << "\n";
  } else {
    Json suites = Json::array();
    for (const auto& v : verdicts) suites.push_back(to_json(v, a.timing));
    Json j{{"suite", "all"},
           {"cases", cases},
           {"failure_count", failures},
           {"suites", std::move(suites)}};
    if (a.timing) j["wall_time_s"] = wall;
    out << j.dump(2) << "\n";
  }
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_orthogonality(const GroupArgs& g, unsigned max_n, const Options& opt, std::ostream& out) {
  const DunklContext ctx(build_group(g));
  const auto report = orthogonality_report(ctx, max_n);
  if (opt.pretty) {
    out << "inner products in units of pi^(" << to_string(make_rational(long(report.dimension), 2))
        << ")\n";
    for (const auto& e : report.entries)
      out << "  (t=" << e.left.t << ", ell=" << e.left.ell << ", h=" << e.left.h_index
          << ") . (t=" << e.right.t << ", ell=" << e.right.ell << ", h=" << e.right.h_index
          << ") = " << to_string(e.value.coefficient) << "\n";
    out << "violations: " << report.violations
        << ", nonpositive norms: " << report.nonpositive_diagonal << "\n";
  } else {
    out << to_json(report).dump(2) << "\n";
  }
  return report.violations == 0 && report.nonpositive_diagonal == 0 ? kExitOk
                                                                    : kExitVerificationFailed;
}

int cmd_harmonics(const GroupArgs& g, unsigned ell, const Options& opt, std::ostream& out) {
  const DunklContext ctx(build_group(g));
  const auto basis = harmonic_basis(ctx, ell);
  if (opt.pretty) {
    out << "H_" << ell << " has dimension " << basis.elements.size() << "\n";
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
      out << "  [" << i << "] " << basis.elements[i].to_string() << "\n";
  } else {
    Json elements = Json::array();
    for (const auto& h : basis.elements) elements.push_back(to_json(h));
    out << Json{{"ell", ell}, {"mu", to_string(ctx.mu())}, {"elements", std::move(elements)}}.dump(2)
        << "\n";
  }
  return kExitOk;
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact Dunkl operators, Clifford-Hermite polynomials and their verification",
               "dunkl-cli");
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--pretty", opt.pretty, "human-readable output instead of JSON");

  GroupArgs g;
  auto* group_info = app.add_subcommand("group-info", "roots, orbits, gamma and mu of a group");
  add_group_options(group_info, g);

  HermiteArgs h;
  auto* hermite = app.add_subcommand("hermite", "Clifford-Hermite polynomial CH_{2t}(H)");
  add_group_options(hermite, g);
  hermite->add_option("--t", h.t, "Hermite index t (degree 2t)")->required();
  hermite->add_option("--ell", h.ell, "harmonic degree")->required();
  hermite->add_option("--h-index", h.h_index, "index into the canonical harmonic basis");
  hermite->add_option("--construction", h.construction)
      ->check(CLI::IsMember({"recursion", "rodrigues", "laguerre", "all"}));

  DecomposeArgs d;
  auto* decompose = app.add_subcommand("decompose", "Fischer decomposition of a homogeneous polynomial");
  add_group_options(decompose, g);
  decompose->add_option("--poly", d.poly, "polynomial as JSON text");
  decompose->add_option("--poly-file", d.poly_file, "polynomial JSON file");

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", v.suite)->check(CLI::IsMember(suites));
  verify->add_option("--max-deg", v.max_deg, "monomial degree cap for operator identities");
  verify->add_option("--seed", v.seed, "seed of the multiplicity draws");
  verify->add_option("--profile", v.profile)->check(CLI::IsMember({"desk", "ci"}));
  verify->add_flag("--timing", v.timing, "report wall time (output is then not reproducible)");
  verify->add_flag("--inject-fault", v.inject_fault,
                   "perturb the coefficient recursion to exercise failure reporting");

  unsigned max_n = 5;
  auto* ortho = app.add_subcommand("orthogonality", "weighted inner products of CH functions (Z2^m)");
  add_group_options(ortho, g);
  ortho->add_option("--max-n", max_n, "largest total degree 2t + ell");

  unsigned ell = 0;
  auto* harmonics = app.add_subcommand("harmonics", "canonical basis of Dunkl harmonics");
  add_group_options(harmonics, g);
  harmonics->add_option("--ell", ell, "degree")->required();

  try {
    app.parse(argc, argv);
    if (*group_info) return cmd_group_info(g, opt, out);
    if (*hermite) return cmd_hermite(g, h, opt, out);
    if (*decompose) return cmd_decompose(g, d, opt, out);
    if (*verify) return cmd_verify(v, opt, out);
    if (*ortho) return cmd_orthogonality(g, max_n, opt, out);
    if (*harmonics) return cmd_harmonics(g, ell, opt, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const PreconditionViolation& e) {
    report_error(err, "precondition", e.what());
    return kExitPrecondition;
  } catch (const DivisionRemainder& e) {
    report_error(err, "division-remainder", e.what());
    return kExitInvalidInput;
  } catch (const InvalidInput& e) {
    report_error(err, "invalid-input", e.what());
    return kExitInvalidInput;
  } catch (const Json::exception& e) {
    report_error(err, "invalid-input", e.what());
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace dunkl
