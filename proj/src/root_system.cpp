#include "dunkl/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

#include "dunkl/errors.hpp"

namespace dunkl {

RootFamily parse_root_family(const std::string& name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "z2") return RootFamily::Z2;
  if (lower == "a") return RootFamily::A;
  if (lower == "b") return RootFamily::B;
  if (lower == "d") return RootFamily::D;
  throw InvalidInput("unsupported root system family '" + name + "'");
}

std::string to_string(RootFamily family) {
  switch (family) {
    case RootFamily::Z2: return "z2";
    case RootFamily::A: return "a";
    case RootFamily::B: return "b";
    case RootFamily::D: return "d";
  }
  return "?";
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size())
    throw InvalidInput("dot product of vectors of length " + std::to_string(a.size()) +
                       " and " + std::to_string(b.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::string vector_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

bool parallel(const RationalVector& a, const RationalVector& b) {
  // a and b are parallel iff every 2x2 minor vanishes.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

RationalVector negated(RationalVector v) {
  for (auto& q : v) q = -q;
  return v;
}

// Index of the root equal to v or -v.
std::optional<std::size_t> find_up_to_sign(const std::vector<RationalVector>& roots,
                                           const RationalVector& v) {
  const RationalVector neg = negated(v);
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v || roots[i] == neg) return i;
  return std::nullopt;
}

RationalVector unit_vector(std::size_t m, std::size_t i, const Rational& c = 1) {
  RationalVector v(m);
  v[i] = c;
  return v;
}

RationalVector sum_of_units(std::size_t m, std::size_t i, std::size_t j, int sign_j) {
  RationalVector v(m);
  v[i] = 1;
  v[j] = sign_j;
  return v;
}

// Checks every precondition except orbit constancy; returns the orbits.
std::vector<std::vector<std::size_t>> validate_geometry(
    const std::vector<RationalVector>& roots) {
  if (roots.empty()) return {};
  const std::size_t m = roots.front().size();
  if (m == 0) throw InvalidInput("root system of dimension 0");
  for (const auto& r : roots) {
    if (r.size() != m)
      throw InvalidInput("root " + vector_string(r) + " has dimension " +
                         std::to_string(r.size()) + ", expected " + std::to_string(m));
    if (is_zero_vector(r)) throw InvalidInput("zero vector given as a root");
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (parallel(roots[i], roots[j]))
        throw InvalidInput("root system not reduced: " + vector_string(roots[i]) + " and " +
                           vector_string(roots[j]) + " are parallel");
  for (const auto& a : roots)
    for (const auto& b : roots) {
      const RationalVector image = reflect(a, b);
      if (!find_up_to_sign(roots, image))
        throw InvalidInput("root system not closed: reflection in " + vector_string(a) +
                           " maps " + vector_string(b) + " to " + vector_string(image) +
                           ", which is not a root");
    }
  return orbit_decomposition(roots);
}

}  // namespace

RationalVector RootSystem::orbit_multiplicities() const {
  RationalVector out;
  for (const auto& orbit : orbits_) out.push_back(kappa_[orbit.front()]);
  return out;
}

RationalMatrix reflection_matrix(const RationalVector& alpha) {
  if (is_zero_vector(alpha)) throw InvalidInput("reflection in the zero vector");
  const std::size_t m = alpha.size();
  const Rational scale = Rational(2) / dot(alpha, alpha);
  RationalMatrix r = RationalMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r(i, j) -= scale * alpha[i] * alpha[j];
  return r;
}

RationalVector reflect(const RationalVector& alpha, const RationalVector& v) {
  const Rational factor = 2 * dot(alpha, v) / dot(alpha, alpha);
  RationalVector out(v);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= factor * alpha[i];
  return out;
}

std::vector<std::vector<std::size_t>> orbit_decomposition(
    const std::vector<RationalVector>& roots) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (auto c = find_up_to_sign(roots, reflect(roots[a], roots[b]))) {
        const auto rb = find(b);
        const auto rc = find(*c);
        if (rb != rc) parent[std::max(rb, rc)] = std::min(rb, rc);
      }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return orbits;
}

std::vector<std::vector<std::size_t>> orbit_decomposition(const RootSystem& rs) {
  return orbit_decomposition(rs.positive_roots());
}

RootSystem custom_root_system(std::vector<RationalVector> positive_roots,
                              RationalVector multiplicities, std::string label) {
  if (positive_roots.empty()) throw InvalidInput("root system needs at least one root");
  if (multiplicities.size() != positive_roots.size())
    throw InvalidInput("got " + std::to_string(multiplicities.size()) +
                       " multiplicities for " + std::to_string(positive_roots.size()) +
                       " positive roots");
  RootSystem rs;
  rs.orbits_ = validate_geometry(positive_roots);
  for (const auto& orbit : rs.orbits_)
    for (auto idx : orbit)
      if (multiplicities[idx] != multiplicities[orbit.front()])
        throw InvalidInput("multiplicity not orbit-constant: roots " +
                           vector_string(positive_roots[orbit.front()]) + " and " +
                           vector_string(positive_roots[idx]) + " share an orbit but have " +
                           multiplicities[orbit.front()].get_str() + " vs " +
                           multiplicities[idx].get_str());
  rs.m_ = positive_roots.front().size();
  rs.roots_ = std::move(positive_roots);
  rs.kappa_ = std::move(multiplicities);
  rs.gamma_ = std::accumulate(rs.kappa_.begin(), rs.kappa_.end(), Rational(0));
  rs.mu_ = Rational(static_cast<long>(rs.m_)) + 2 * rs.gamma_;
  rs.label_ = std::move(label);
  return rs;
}

RootSystem custom_root_system_by_orbit(
    std::vector<RationalVector> positive_roots,
    const std::vector<std::pair<RationalVector, Rational>>& orbit_kappas, std::string label) {
  if (positive_roots.empty()) throw InvalidInput("root system needs at least one root");
  const auto orbits = validate_geometry(positive_roots);
  std::vector<std::optional<Rational>> per_orbit(orbits.size());
  for (const auto& [rep, kappa] : orbit_kappas) {
    const auto idx = find_up_to_sign(positive_roots, rep);
    if (!idx)
      throw InvalidInput("orbit representative " + vector_string(rep) + " is not a root");
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (std::find(orbits[o].begin(), orbits[o].end(), *idx) == orbits[o].end()) continue;
      if (per_orbit[o] && *per_orbit[o] != kappa)
        throw InvalidInput("multiplicity not orbit-constant: orbit of " + vector_string(rep) +
                           " given both " + per_orbit[o]->get_str() + " and " +
                           kappa.get_str());
      per_orbit[o] = kappa;
    }
  }
  RationalVector kappa(positive_roots.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (!per_orbit[o])
      throw InvalidInput("no multiplicity given for the orbit of " +
                         vector_string(positive_roots[orbits[o].front()]));
    for (auto idx : orbits[o]) kappa[idx] = *per_orbit[o];
  }
  return custom_root_system(std::move(positive_roots), std::move(kappa), std::move(label));
}

RootSystem builtin_root_system(RootFamily family, std::size_t m, const RationalVector& kappa) {
  std::vector<RationalVector> roots;
  switch (family) {
    case RootFamily::Z2:
      if (m < 1) throw InvalidInput("Z2^m needs m >= 1");
      for (std::size_t i = 0; i < m; ++i) roots.push_back(unit_vector(m, i));
      break;
    case RootFamily::A:
      if (m < 2) throw InvalidInput("A_{m-1} needs m >= 2");
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) roots.push_back(sum_of_units(m, i, j, -1));
      break;
    case RootFamily::B:
      if (m < 2) throw InvalidInput("B_m needs m >= 2");
      for (std::size_t i = 0; i < m; ++i) roots.push_back(unit_vector(m, i));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          roots.push_back(sum_of_units(m, i, j, -1));
          roots.push_back(sum_of_units(m, i, j, +1));
        }
      break;
    case RootFamily::D:
      if (m < 2) throw InvalidInput("D_m needs m >= 2");
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          roots.push_back(sum_of_units(m, i, j, -1));
          roots.push_back(sum_of_units(m, i, j, +1));
        }
      break;
  }
  for (const auto& k : kappa)
    if (k < 0) throw InvalidInput("multiplicity " + k.get_str() + " is negative");

  const auto orbits = orbit_decomposition(roots);
  RationalVector per_orbit = kappa;
  if (family == RootFamily::Z2 && kappa.size() == 1 && orbits.size() > 1)
    per_orbit.assign(orbits.size(), kappa.front());
  if (per_orbit.size() != orbits.size())
    throw InvalidInput("group " + to_string(family) + " with m=" + std::to_string(m) +
                       " has " + std::to_string(orbits.size()) + " root orbit(s), got " +
                       std::to_string(kappa.size()) + " multiplicities");
  RationalVector per_root(roots.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (auto idx : orbits[o]) per_root[idx] = per_orbit[o];

  std::string label = to_string(family) + "(m=" + std::to_string(m) + ")";
  return custom_root_system(std::move(roots), std::move(per_root), std::move(label));
}

}  // namespace dunkl
