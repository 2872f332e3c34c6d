#pragma once

#include <json.hpp>

#include "dunkl/clifford.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/moments.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

// Insertion-ordered so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// {"m": 2, "terms": [{"c": "-4/1", "e": [2,0]}, ...]}, terms in deg-lex order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"m": 2, "blades": [{"mask": 0, "poly": {...}}, ...]}, masks ascending.
Json to_json(const CliffordPolynomial& f);
CliffordPolynomial clifford_from_json(const Json& j);

Json to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j);

// {"m":2, "positive_roots":[["1","0"],...],
//  "multiplicities":[{"orbit_rep":["1","0"],"kappa":"1/2"}, ...]}
RootSystem root_system_from_json(const Json& j);
// Group summary: roots, orbits with their kappa, gamma and mu.
Json to_json(const RootSystem& rs);

// {"t":1, "ell":0, "mu":"2/1", "radial_coeffs":[...], "harmonic":{...},
//  "polynomial":{...}}
Json to_json(const HermiteRecord& rec);

Json to_json(const std::vector<FischerComponent>& components);

// List of {"left":{"t","ell","h_index"}, "right":{...}, "value_coeff",
// "pi_power"}.
Json to_json(const OrthogonalityReport& report);

}  // namespace dunkl
