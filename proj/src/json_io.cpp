#include "dunkl/json_io.hpp"

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InvalidInput("expected a rational as \"num/den\" string or integer, got " + j.dump());
}

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field \"") + key + "\" in " + j.dump());
  return j.at(key);
}

std::size_t dimension_from_json(const Json& j) {
  const Json& m = require_field(j, "m");
  if (!m.is_number_integer() || m.get<long long>() < 0)
    throw InvalidInput("field \"m\" must be a nonnegative integer, got " + m.dump());
  return m.get<std::size_t>();
}

}  // namespace

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms())
    terms.push_back(Json{{"c", to_string(c)}, {"e", mono.exponents()}});
  return Json{{"m", p.dimension()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  const std::size_t m = dimension_from_json(j);
  const Json& terms = require_field(j, "terms");
  if (!terms.is_array()) throw InvalidInput("field \"terms\" must be an array");
  Polynomial p(m);
  for (const auto& term : terms) {
    const Rational c = rational_from_json(require_field(term, "c"));
    const Json& e = require_field(term, "e");
    if (!e.is_array() || e.size() != m)
      throw InvalidInput("exponent array " + e.dump() + " must have length " + std::to_string(m));
    std::vector<unsigned> exps;
    for (const auto& x : e) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw InvalidInput("exponents must be nonnegative integers, got " + e.dump());
      exps.push_back(x.get<unsigned>());
    }
    p.add_term(Monomial(std::move(exps)), c);
  }
  return p;
}

Json to_json(const CliffordPolynomial& f) {
  Json blades = Json::array();
  for (const auto& [mask, p] : f.blades())
    blades.push_back(Json{{"mask", mask}, {"poly", to_json(p)}});
  return Json{{"m", f.dimension()}, {"blades", std::move(blades)}};
}

CliffordPolynomial clifford_from_json(const Json& j) {
  const std::size_t m = dimension_from_json(j);
  const Json& blades = require_field(j, "blades");
  if (!blades.is_array()) throw InvalidInput("field \"blades\" must be an array");
  CliffordPolynomial f(m);
  for (const auto& b : blades) {
    const Json& mask = require_field(b, "mask");
    if (!mask.is_number_integer() || mask.get<long long>() < 0)
      throw InvalidInput("blade mask must be a nonnegative integer, got " + mask.dump());
    Polynomial p = polynomial_from_json(require_field(b, "poly"));
    if (p.dimension() != m)
      throw InvalidInput("blade polynomial of dimension " + std::to_string(p.dimension()) +
                         " in Clifford polynomial of dimension " + std::to_string(m));
    f.add_to_blade(mask.get<BladeMask>(), p);
  }
  return f;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals, got " + j.dump());
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

RootSystem root_system_from_json(const Json& j) {
  const std::size_t m = dimension_from_json(j);
  const Json& roots_json = require_field(j, "positive_roots");
  if (!roots_json.is_array()) throw InvalidInput("field \"positive_roots\" must be an array");
  std::vector<RationalVector> roots;
  for (const auto& r : roots_json) {
    roots.push_back(rational_vector_from_json(r));
    if (roots.back().size() != m)
      throw InvalidInput("root " + r.dump() + " does not have " + std::to_string(m) +
                         " coordinates");
  }
  const Json& mult = require_field(j, "multiplicities");
  if (!mult.is_array()) throw InvalidInput("field \"multiplicities\" must be an array");
  std::vector<std::pair<RationalVector, Rational>> orbit_kappas;
  for (const auto& entry : mult)
    orbit_kappas.emplace_back(rational_vector_from_json(require_field(entry, "orbit_rep")),
                              rational_from_json(require_field(entry, "kappa")));
  std::string label = j.contains("label") && j["label"].is_string()
                          ? j["label"].get<std::string>()
                          : std::string("custom");
  return custom_root_system_by_orbit(std::move(roots), orbit_kappas, std::move(label));
}

Json to_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(to_json(r));
  Json orbits = Json::array();
  for (const auto& orbit : rs.orbits()) {
    Json members = Json::array();
    for (auto idx : orbit) members.push_back(to_json(rs.positive_roots()[idx]));
    orbits.push_back(Json{{"kappa", to_string(rs.multiplicities()[orbit.front()])},
                          {"roots", std::move(members)}});
  }
  return Json{{"label", rs.label()},
              {"m", rs.dimension()},
              {"positive_roots", std::move(roots)},
              {"orbits", std::move(orbits)},
              {"gamma", to_string(rs.gamma())},
              {"mu", to_string(rs.mu())}};
}

Json to_json(const HermiteRecord& rec) {
  return Json{{"t", rec.t},
              {"ell", rec.ell},
              {"mu", to_string(rec.mu)},
              {"radial_coeffs", to_json(rec.radial_coeffs)},
              {"harmonic", to_json(rec.harmonic)},
              {"polynomial", to_json(rec.polynomial)}};
}

Json to_json(const std::vector<FischerComponent>& components) {
  Json out = Json::array();
  for (const auto& c : components)
    out.push_back(Json{{"i", c.i},
                       {"harmonic_degree", c.harmonic.degree()},
                       {"harmonic", to_json(c.harmonic)},
                       {"component", to_json(c.component)}});
  return out;
}

Json to_json(const OrthogonalityReport& report) {
  auto label = [](const HermiteLabel& l) {
    return Json{{"t", l.t}, {"ell", l.ell}, {"h_index", l.h_index}};
  };
  const std::string pi_power = to_string(make_rational(static_cast<long>(report.dimension), 2));
  Json out = Json::array();
  for (const auto& e : report.entries)
    out.push_back(Json{{"left", label(e.left)},
                       {"right", label(e.right)},
                       {"value_coeff", to_string(e.value.coefficient)},
                       {"pi_power", pi_power}});
  return out;
}

}  // namespace dunkl
