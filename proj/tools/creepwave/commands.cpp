// SPDX-License-Identifier: Apache-2.0
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cli.hpp"
#include "creepwave/eikonal.hpp"
#include "creepwave/error.hpp"
#include "creepwave/ludwig.hpp"
#include "creepwave/scattering.hpp"
#include "json.hpp"

#ifndef CREEPWAVE_VERSION
#define CREEPWAVE_VERSION "0.0.0"
#endif

namespace creepwave::cli {
namespace {

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::string name;  // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return "";
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_double(*d);  // JSON has no inf/nan
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

std::string render(const Table& t, const std::string& command, const ScenarioConfig& config,
                   Format format) {
  std::string out;
  if (format == Format::Csv) {
    out += "# creepwave " CREEPWAVE_VERSION " " + command + " config_hash=" + hash_hex(config.hash) +
           "\n";
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      out += (j ? "," : "") + t.columns[j];
    }
    out += "\n";
    for (const auto& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out += ",";
        out += csv_cell(row[j]);
      }
      out += "\n";
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["meta"] = {{"tool", "creepwave"},
                 {"version", CREEPWAVE_VERSION},
                 {"command", command},
                 {"config_hash", hash_hex(config.hash)}};
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(json_cell(c));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

void write_tables(const std::vector<Table>& tables, const std::string& command,
                  const ScenarioConfig& config, const Invocation& call) {
  std::filesystem::create_directories(call.out_dir);
  for (const Table& t : tables) {
    const auto path =
        call.out_dir / (t.name + (call.format == Format::Csv ? ".csv" : ".json"));
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
    file << render(t, command, config, call.format);
    if (!file) throw std::runtime_error("write to " + path.string() + " failed");
  }
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Precision:
    case ErrorKind::Convergence:
    case ErrorKind::Consistency:
      return kExitConvergence;
    default:
      return kExitDomain;
  }
}

// Per-point failures, reported together once the whole grid has been tried.
struct Failures {
  std::vector<std::string> messages;
  int code = kExitOk;

  void add(const std::string& where, const Error& e) {
    messages.push_back(where + ": " + to_string(e.kind()) + ": " + e.what());
    // Domain-class problems outrank convergence ones: the input is at fault.
    const int c = exit_code(e.kind());
    if (code == kExitOk || c == kExitDomain) code = c;
  }

  int report(std::ostream& err) const {
    for (const auto& m : messages) err << "error: " << m << "\n";
    return code;
  }
};

std::string point(const char* name, double x) { return std::string(name) + "=" + format_double(x); }

// ---------------------------------------------------------------------------

int cmd_amplitude(const ScenarioConfig& c, const Invocation& call, std::ostream& err) {
  const auto& a = c.amplitude;
  Complex nu0 = c.obstacle.pole_degree();
  if (a.nu0_source == DegreeSource::Refined) {
    nu0 = specfun::hankel_root(1, c.obstacle.wavenumber, c.obstacle.radius, a.root_tolerance)
              .degree;
  }
  const auto lambda = scattering::momentum_from_degree(nu0);
  const Complex g = scattering::legendre_prefactor(lambda, a.coefficient);

  Table t{"amplitude", {"theta_s", "method", "re_f", "im_f", "sigma"}, {}};
  Failures failures;
  bool warned = false;
  for (double theta : a.theta.values) {
    const std::pair<const char*, std::function<Complex()>> methods[] = {
        {"multi_turn",
         [&] {
           const auto m = scattering::multi_turn_amplitude(theta, nu0, a.coefficient, a.turns);
           if (!m.convergent && !warned) {
             err << "warning: multi_turn: Im nu_0 <= 0, the turn sum does not converge; "
                    "partial sums are reported\n";
             warned = true;
           }
           return m.value;
         }},
        {"resummed", [&] { return scattering::resummed_amplitude(theta, nu0, a.coefficient); }},
        {"legendre",
         [&] { return scattering::legendre_amplitude(theta, lambda, g, a.legendre_cutoff); }},
    };
    for (const auto& [name, eval] : methods) {
      try {
        const Complex f = eval();
        t.rows.push_back({theta, std::string(name), f.real(), f.imag(), std::norm(f)});
      } catch (const Error& e) {
        failures.add(std::string(name) + " " + point("theta_s", theta), e);
      }
    }
  }
  if (!failures.messages.empty()) return failures.report(err);
  write_tables({t}, "amplitude", c, call);
  return kExitOk;
}

int cmd_resonances(const ScenarioConfig& c, const Invocation& call, std::ostream& err) {
  const auto& r = c.resonances;
  const eikonal::RotationalLine line{r.inertia, r.intercept};
  const auto trajectory = scattering::rotational_trajectory(line, r.beta);
  const auto scan =
      scattering::scan_resonances(trajectory, r.l_min, r.l_max, r.energy.values, r.tolerance);

  Table table{"resonances", {"l", "kind", "energy", "delta"}, {}};
  for (int l = r.l_min; l <= r.l_max; ++l) {
    const double centrifugal = static_cast<double>(l) * (l + 1);
    const double extrapolated = (centrifugal - r.intercept) / (2.0 * r.inertia);
    if (centrifugal < r.intercept) {
      table.rows.push_back({static_cast<long long>(l), std::string("bound"), extrapolated, {}});
      continue;
    }
    if (centrifugal == r.intercept) {
      table.rows.push_back({static_cast<long long>(l), std::string("threshold"), 0.0, {}});
      continue;
    }
    bool found = false;
    for (const auto& e : scan.resonances) {
      if (e.l != l) continue;
      table.rows.push_back({static_cast<long long>(l), std::string("resonance"), e.energy, e.delta});
      found = true;
    }
    if (!found) {
      err << "warning: l=" << l << ": no upward pi/2 crossing on the energy grid\n";
    }
  }

  Table profile{"delta_profile", {"l", "energy", "delta"}, {}};
  for (int l = r.l_min; l <= r.l_max; ++l) {
    for (double e : r.energy.values) {
      profile.rows.push_back({static_cast<long long>(l), e,
                              scattering::resonance_phase_shift_continuous(l, trajectory(e))});
    }
  }
  write_tables({table, profile}, "resonances", c, call);
  return kExitOk;
}

int cmd_caustic(const ScenarioConfig& c, const Invocation& call, std::ostream& err) {
  const auto& cc = c.caustic;
  const double k = c.obstacle.wavenumber;
  const auto& rs = cc.r.values;

  std::vector<double> v(rs.size()), v_r(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] < 1.0) {
      v[i] = ludwig::shadow_v(rs[i]);
      v_r[i] = ludwig::shadow_v_r(rs[i]);
    } else {
      v[i] = rs[i] == 1.0 ? 0.0 : ludwig::lit_v(rs[i]);
      v_r[i] = ludwig::lit_v_r(rs[i]);
    }
  }
  auto sign = [](double x) { return (x > 0.0) - (x < 0.0); };
  std::vector<long long> boundary(rs.size(), 0);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const bool flip_prev = i > 0 && sign(v[i]) != sign(v[i - 1]);
    const bool flip_next = i + 1 < rs.size() && sign(v[i]) != sign(v[i + 1]);
    boundary[i] = v[i] == 0.0 || flip_prev || flip_next;
  }

  Table t{"caustic",
          {"r", "theta", "u", "v", "re_psi", "im_psi", "regime", "abs_psi", "abs_shadow",
           "boundary"},
          {}};
  Failures failures;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (double theta : cc.theta.values) {
      try {
        const double u = theta;
        const auto regime = ludwig::classify_regime(v[i], -v_r[i], cc.regime_tolerance);
        const Complex psi = ludwig::field_sample(u, v[i], k, cc.a0, cc.a1).psi;
        const auto mapping =
            rs[i] <= 1.0 ? ludwig::ShadowMapping::Interior : ludwig::ShadowMapping::Exterior;
        const double shadow = std::abs(ludwig::shadow_field(rs[i], theta, k, mapping));
        t.rows.push_back({rs[i], theta, u, v[i], psi.real(), psi.imag(),
                          std::string(ludwig::to_string(regime.tag)), std::abs(psi), shadow,
                          boundary[i]});
      } catch (const Error& e) {
        failures.add(point("r", rs[i]) + " " + point("theta", theta), e);
      }
    }
  }
  if (!failures.messages.empty()) return failures.report(err);
  write_tables({t}, "caustic", c, call);
  return kExitOk;
}

int cmd_bound_states(const ScenarioConfig& c, const Invocation& call, std::ostream& err) {
  Table t{"bound_states", {"l", "L", "theta", "psi"}, {}};
  Failures failures;
  for (int l = 0; l <= c.bound_states.l_max; ++l) {
    for (double theta : c.bound_states.theta.values) {
      try {
        t.rows.push_back({static_cast<long long>(l), eikonal::quantized_momentum(l), theta,
                          eikonal::bound_state_wavefunction(l, theta)});
      } catch (const Error& e) {
        failures.add("l=" + std::to_string(l) + " " + point("theta", theta), e);
      }
    }
  }
  if (!failures.messages.empty()) return failures.report(err);
  write_tables({t}, "bound-states", c, call);
  return kExitOk;
}

int cmd_roots(const ScenarioConfig& c, const Invocation& call, std::ostream& err) {
  if (c.roots.m_max > 10) {
    err << "warning: roots beyond m=10 are outside the tested range\n";
  }
  specfun::RootOptions opts;
  opts.seed = c.roots.seed;
  Table t{"roots", {"m", "re_nu", "im_nu", "residual", "iterations", "re_seed", "im_seed"}, {}};
  for (int m = 1; m <= c.roots.m_max; ++m) {
    const auto root = specfun::hankel_root(m, c.obstacle.wavenumber, c.obstacle.radius,
                                           c.roots.tolerance, opts);
    t.rows.push_back({static_cast<long long>(m), root.degree.real(), root.degree.imag(),
                      root.residual, static_cast<long long>(root.iterations), root.seed.real(),
                      root.seed.imag()});
  }
  write_tables({t}, "roots", c, call);
  return kExitOk;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int run_command(const Invocation& call, std::ostream& err) {
  using Handler = int (*)(const ScenarioConfig&, const Invocation&, std::ostream&);
  const std::pair<const char*, Handler> commands[] = {
      {"amplitude", cmd_amplitude},       {"resonances", cmd_resonances},
      {"caustic", cmd_caustic},           {"bound-states", cmd_bound_states},
      {"roots", cmd_roots},
  };
  Handler handler = nullptr;
  for (const auto& [name, h] : commands) {
    if (call.command == name) handler = h;
  }
  if (!handler) {
    err << "error: unknown command '" << call.command << "'\n";
    return kExitConfig;
  }
  try {
    const ScenarioConfig config =
        parse_config(call.config_path.empty() ? std::string() : read_file(call.config_path));
    return handler(config, call, err);
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace creepwave::cli
