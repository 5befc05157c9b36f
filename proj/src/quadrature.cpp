// SPDX-License-Identifier: Apache-2.0
#include "creepwave/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace creepwave::quad {

GaussLegendre make_gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n in long double.
    long double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                             (static_cast<double>(n) + 0.5));
    long double dp = 1.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(static_cast<double>(dx)) < 1e-19) break;
    }
    const double w = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
    rule.nodes[i] = -static_cast<double>(x);
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const GaussLegendre& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendre> rules;
  std::lock_guard lock(mutex);
  auto it = rules.find(n);
  if (it == rules.end()) it = rules.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

}  // namespace creepwave::quad
