// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the unit tests: the reference-value table and a few
// quadrature and error utilities used as independent checks.
#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "creepwave/quadrature.hpp"
#include "creepwave/types.hpp"

#ifndef CREEPWAVE_FIXTURES
#error "CREEPWAVE_FIXTURES must point at tests/fixtures"
#endif

namespace creepwave::testing {

struct Record {
  std::string kind;
  std::vector<double> numbers;  // inputs followed by expected values
  double tolerance;
  std::string source;
};

inline std::vector<Record> load_records(const std::string& kind) {
  std::ifstream in(std::string(CREEPWAVE_FIXTURES) + "/reference_values.txt");
  if (!in) throw std::runtime_error("reference_values.txt not found");
  std::vector<Record> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.size() < 3 || tokens[0] != kind) continue;
    Record r{tokens[0], {}, std::stod(tokens[tokens.size() - 2]), tokens.back()};
    for (std::size_t i = 1; i + 2 < tokens.size(); ++i) r.numbers.push_back(std::stod(tokens[i]));
    out.push_back(std::move(r));
  }
  return out;
}

inline double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

inline double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

/// Panel breaks on [a, b] refined geometrically toward `a` (toward_a) or `b`,
/// for integrands with an endpoint singularity.
inline std::vector<double> graded_breaks(double a, double b, bool toward_a, int levels,
                                         int uniform = 8) {
  std::vector<double> offsets;  // distances from the singular end
  const double len = b - a;
  for (int j = levels; j >= 1; --j) offsets.push_back(len * std::ldexp(1.0, -j) * 0.5);
  for (int i = 1; i <= uniform; ++i) offsets.push_back(len * (0.5 + 0.5 * i / uniform));
  std::vector<double> breaks;
  if (toward_a) {
    breaks.push_back(a);
    for (double d : offsets) breaks.push_back(a + d);
    breaks.back() = b;
  } else {
    breaks.push_back(a);
    for (auto it = offsets.rbegin() + 1; it != offsets.rend(); ++it) breaks.push_back(b - *it);
    breaks.push_back(b);
  }
  return breaks;
}

}  // namespace creepwave::testing
