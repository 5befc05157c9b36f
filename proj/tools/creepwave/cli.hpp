// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Everything here is file plumbing around the library;
// run() is what main() calls and what the integration tests drive in-process.
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "creepwave/geometry.hpp"
#include "creepwave/specfun.hpp"

namespace creepwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitConvergence = 4;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Either an explicit strictly increasing list or count points spanning [min, max].
struct Grid {
  std::vector<double> values;
};

enum class DegreeSource { Geometric, Refined };

struct AmplitudeConfig {
  Grid theta;
  int turns = 50;
  DegreeSource nu0_source = DegreeSource::Geometric;
  double root_tolerance = 1e-10;
  double legendre_cutoff = 0.05;
  Complex coefficient{1.0, 0.0};
};

struct ResonanceConfig {
  double inertia = 1.0;
  double intercept = 20.0;
  double beta = 0.05;
  int l_min = 0;
  int l_max = 10;
  Grid energy;
  double tolerance = 1e-10;
};

struct CausticConfig {
  Grid r;
  Grid theta;
  Complex a0{1.0, 0.0};
  Complex a1{0.0, 0.0};
  double regime_tolerance = 1e-12;
};

struct BoundStateConfig {
  int l_max = 5;
  Grid theta;
};

struct RootConfig {
  int m_max = 3;
  double tolerance = 1e-10;
  specfun::RootSeed seed = specfun::RootSeed::AiryZeros;
};

struct ScenarioConfig {
  geometry::ObstacleSpec obstacle{1.0, 10.0, 0.3};
  AmplitudeConfig amplitude;
  ResonanceConfig resonances;
  CausticConfig caustic;
  BoundStateConfig bound_states;
  RootConfig roots;
  /// FNV-1a of the canonical JSON of the effective configuration.
  std::uint64_t hash = 0;
};

/// Parses a JSON document (empty string = all defaults). Throws ConfigError.
ScenarioConfig parse_config(const std::string& text);

/// Canonical JSON (sorted keys, defaults filled in) of a configuration.
std::string canonical_json(const ScenarioConfig& config);

std::uint64_t fnv1a(const std::string& bytes);

enum class Format { Csv, Json };

struct Invocation {
  std::string command;
  std::filesystem::path config_path;  // empty: defaults
  std::filesystem::path out_dir = ".";
  Format format = Format::Csv;
};

/// Runs one subcommand; returns the process exit code. Diagnostics go to `err`.
int run_command(const Invocation& call, std::ostream& err);

/// Full argument parsing plus run_command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace creepwave::cli
