// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace creepwave::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Builds an n-point rule (Newton on P_n, accurate to a few ulp).
GaussLegendre make_gauss_legendre(std::size_t n);

/// Shared read-only rule; built once per process for each n.
const GaussLegendre& gauss_legendre(std::size_t n);

/// Integrates f over [a, b] with a single application of `rule`.
template <class F>
auto integrate(F&& f, double a, double b, const GaussLegendre& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  decltype(f(mid)) sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

/// Integrates f over consecutive panels [breaks[i], breaks[i+1]].
template <class F>
auto integrate_panels(F&& f, std::span<const double> breaks, const GaussLegendre& rule) {
  decltype(f(breaks[0])) sum{};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    sum += integrate(f, breaks[i], breaks[i + 1], rule);
  }
  return sum;
}

}  // namespace creepwave::quad
