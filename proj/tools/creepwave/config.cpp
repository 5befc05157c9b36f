// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <initializer_list>
#include <string_view>

#include "cli.hpp"
#include "json.hpp"

namespace creepwave::cli {
namespace {

using nlohmann::json;

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (std::string_view key : allowed) known = known || item.key() == key;
    if (!known) throw ConfigError(where + ": unknown key '" + item.key() + "'");
  }
}

double number(const json& obj, const char* key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": must be finite");
  return x;
}

int integer(const json& obj, const char* key, int fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

double positive(const json& obj, const char* key, double fallback, const std::string& where) {
  const double x = number(obj, key, fallback, where);
  if (!(x > 0.0)) throw ConfigError(where + "." + key + ": must be > 0");
  return x;
}

Complex complex_value(const json& obj, const char* key, Complex fallback,
                      const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ConfigError(where + "." + key + ": expected [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::string text(const json& obj, const char* key, const std::string& fallback,
                 const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

Grid linear_grid(double lo, double hi, int count) {
  Grid g;
  if (count == 1) {
    g.values.push_back(lo);
    return g;
  }
  g.values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    // Endpoints exactly, interior points by interpolation from both ends.
    g.values.push_back(i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
  }
  return g;
}

Grid grid(const json& obj, const char* key, const Grid& fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  const std::string here = where + "." + key;
  Grid g;
  if (v.is_object() && v.contains("values")) {
    check_keys(v, {"values"}, here);
    const json& values = v.at("values");
    if (!values.is_array()) throw ConfigError(here + ".values: expected an array");
    for (const json& x : values) {
      if (!x.is_number()) throw ConfigError(here + ".values: expected numbers");
      g.values.push_back(x.get<double>());
    }
  } else {
    check_keys(v, {"min", "max", "count"}, here);
    if (!v.contains("min") || !v.contains("max") || !v.contains("count")) {
      throw ConfigError(here + ": needs min, max and count (or values)");
    }
    const double lo = number(v, "min", 0.0, here);
    const double hi = number(v, "max", 0.0, here);
    const int count = integer(v, "count", 0, here);
    if (count < 1) throw ConfigError(here + ".count: must be >= 1");
    if (count > 1 && !(hi > lo)) throw ConfigError(here + ": max must exceed min");
    g = linear_grid(lo, hi, count);
  }
  if (g.values.empty()) throw ConfigError(here + ": grid is empty");
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (!std::isfinite(g.values[i])) throw ConfigError(here + ": non-finite grid value");
    if (i > 0 && !(g.values[i] > g.values[i - 1])) {
      throw ConfigError(here + ": grid must be strictly increasing");
    }
  }
  return g;
}

json grid_json(const Grid& g) { return json{{"values", g.values}}; }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

const char* seed_name(specfun::RootSeed s) {
  return s == specfun::RootSeed::AiryZeros ? "airy-zeros" : "kr-sqrt";
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ScenarioConfig parse_config(const std::string& source) {
  json doc;
  try {
    doc = source.empty() ? json::object() : json::parse(source);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(doc, {"obstacle", "amplitude", "resonances", "caustic", "bound_states", "roots"},
             "config");
  const json empty = json::object();
  auto section = [&](const char* key) -> const json& {
    return doc.contains(key) ? doc.at(key) : empty;
  };

  ScenarioConfig c;
  const double half_pi_margin = 0.05;

  const json& ob = section("obstacle");
  check_keys(ob, {"radius", "wavenumber", "leakage"}, "obstacle");
  c.obstacle.radius = number(ob, "radius", c.obstacle.radius, "obstacle");
  c.obstacle.wavenumber = number(ob, "wavenumber", c.obstacle.wavenumber, "obstacle");
  c.obstacle.leakage = number(ob, "leakage", c.obstacle.leakage, "obstacle");
  try {
    c.obstacle.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("obstacle: ") + e.what());
  }

  const json& am = section("amplitude");
  check_keys(am,
             {"theta", "turns", "nu0_source", "root_tolerance", "legendre_cutoff", "coefficient"},
             "amplitude");
  c.amplitude.theta =
      grid(am, "theta", linear_grid(half_pi_margin, kPi - half_pi_margin, 181), "amplitude");
  c.amplitude.turns = integer(am, "turns", c.amplitude.turns, "amplitude");
  if (c.amplitude.turns < 0) throw ConfigError("amplitude.turns: must be >= 0");
  const std::string source_name = text(am, "nu0_source", "geometric", "amplitude");
  if (source_name == "geometric") {
    c.amplitude.nu0_source = DegreeSource::Geometric;
  } else if (source_name == "refined") {
    c.amplitude.nu0_source = DegreeSource::Refined;
  } else {
    throw ConfigError("amplitude.nu0_source: expected 'geometric' or 'refined'");
  }
  c.amplitude.root_tolerance =
      positive(am, "root_tolerance", c.amplitude.root_tolerance, "amplitude");
  c.amplitude.legendre_cutoff =
      positive(am, "legendre_cutoff", c.amplitude.legendre_cutoff, "amplitude");
  c.amplitude.coefficient = complex_value(am, "coefficient", c.amplitude.coefficient, "amplitude");

  const json& re = section("resonances");
  check_keys(re, {"inertia", "intercept", "beta", "l_min", "l_max", "energy", "tolerance"},
             "resonances");
  c.resonances.inertia = positive(re, "inertia", c.resonances.inertia, "resonances");
  c.resonances.intercept = number(re, "intercept", c.resonances.intercept, "resonances");
  c.resonances.beta = number(re, "beta", c.resonances.beta, "resonances");
  if (!(c.resonances.beta >= 0.0)) throw ConfigError("resonances.beta: must be >= 0");
  c.resonances.l_min = integer(re, "l_min", c.resonances.l_min, "resonances");
  c.resonances.l_max = integer(re, "l_max", c.resonances.l_max, "resonances");
  if (c.resonances.l_min < 0 || c.resonances.l_max < c.resonances.l_min) {
    throw ConfigError("resonances: need 0 <= l_min <= l_max");
  }
  c.resonances.energy = grid(re, "energy", linear_grid(0.01, 60.0, 2000), "resonances");
  if (!(c.resonances.energy.values.front() > 0.0)) {
    throw ConfigError("resonances.energy: energies must be > 0");
  }
  c.resonances.tolerance = positive(re, "tolerance", c.resonances.tolerance, "resonances");

  const json& ca = section("caustic");
  check_keys(ca, {"r", "theta", "a0", "a1", "regime_tolerance"}, "caustic");
  c.caustic.r = grid(ca, "r", linear_grid(0.5, 1.5, 201), "caustic");
  if (!(c.caustic.r.values.front() > 0.0)) throw ConfigError("caustic.r: radii must be > 0");
  c.caustic.theta = grid(ca, "theta", linear_grid(0.0, 1.5 * kPi, 4), "caustic");
  c.caustic.a0 = complex_value(ca, "a0", c.caustic.a0, "caustic");
  c.caustic.a1 = complex_value(ca, "a1", c.caustic.a1, "caustic");
  c.caustic.regime_tolerance =
      positive(ca, "regime_tolerance", c.caustic.regime_tolerance, "caustic");

  const json& bs = section("bound_states");
  check_keys(bs, {"l_max", "theta"}, "bound_states");
  c.bound_states.l_max = integer(bs, "l_max", c.bound_states.l_max, "bound_states");
  if (c.bound_states.l_max < 0) throw ConfigError("bound_states.l_max: must be >= 0");
  c.bound_states.theta =
      grid(bs, "theta", linear_grid(half_pi_margin, kPi - half_pi_margin, 91), "bound_states");

  const json& ro = section("roots");
  check_keys(ro, {"m_max", "tolerance", "seed"}, "roots");
  c.roots.m_max = integer(ro, "m_max", c.roots.m_max, "roots");
  if (c.roots.m_max < 1) throw ConfigError("roots.m_max: must be >= 1");
  c.roots.tolerance = positive(ro, "tolerance", c.roots.tolerance, "roots");
  const std::string seed = text(ro, "seed", "airy-zeros", "roots");
  if (seed == "airy-zeros") {
    c.roots.seed = specfun::RootSeed::AiryZeros;
  } else if (seed == "kr-sqrt") {
    c.roots.seed = specfun::RootSeed::KrSqrt;
  } else {
    throw ConfigError("roots.seed: expected 'airy-zeros' or 'kr-sqrt'");
  }

  c.hash = fnv1a(canonical_json(c));
  return c;
}

std::string canonical_json(const ScenarioConfig& c) {
  json doc;
  doc["obstacle"] = {{"radius", c.obstacle.radius},
                     {"wavenumber", c.obstacle.wavenumber},
                     {"leakage", c.obstacle.leakage}};
  doc["amplitude"] = {
      {"theta", grid_json(c.amplitude.theta)},
      {"turns", c.amplitude.turns},
      {"nu0_source", c.amplitude.nu0_source == DegreeSource::Geometric ? "geometric" : "refined"},
      {"root_tolerance", c.amplitude.root_tolerance},
      {"legendre_cutoff", c.amplitude.legendre_cutoff},
      {"coefficient", complex_json(c.amplitude.coefficient)}};
  doc["resonances"] = {{"inertia", c.resonances.inertia},  {"intercept", c.resonances.intercept},
                       {"beta", c.resonances.beta},        {"l_min", c.resonances.l_min},
                       {"l_max", c.resonances.l_max},      {"energy", grid_json(c.resonances.energy)},
                       {"tolerance", c.resonances.tolerance}};
  doc["caustic"] = {{"r", grid_json(c.caustic.r)},
                    {"theta", grid_json(c.caustic.theta)},
                    {"a0", complex_json(c.caustic.a0)},
                    {"a1", complex_json(c.caustic.a1)},
                    {"regime_tolerance", c.caustic.regime_tolerance}};
  doc["bound_states"] = {{"l_max", c.bound_states.l_max},
                         {"theta", grid_json(c.bound_states.theta)}};
  doc["roots"] = {{"m_max", c.roots.m_max},
                  {"tolerance", c.roots.tolerance},
                  {"seed", seed_name(c.roots.seed)}};
  return doc.dump();
}

}  // namespace creepwave::cli
