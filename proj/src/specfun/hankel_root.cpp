// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>

#include "creepwave/specfun.hpp"

namespace creepwave::specfun {

Complex hankel_root_seed(int m, double kr, RootSeed rule) {
  if (m < 1) throw DomainError("hankel_root_seed: index must be positive");
  if (!(kr > 0.0)) throw DomainError("hankel_root_seed: kR must be positive");
  const double exponent = rule == RootSeed::AiryZeros ? 1.0 / 3.0 : 0.5;
  const double airy_like = std::pow(0.75 * kPi * (4.0 * m - 1.0), 2.0 / 3.0);
  return kr + 0.5 * std::pow(kr, exponent) * airy_like * std::polar(1.0, kPi / 3.0);
}

HankelRoot hankel_root(int m, double k, double radius, double tol, const RootOptions& opts) {
  if (m < 1) throw DomainError("hankel_root: index must be positive");
  if (!(tol > 0.0)) throw DomainError("hankel_root: tolerance must be positive");
  const double kr = k * radius;
  if (!(kr >= 5.0)) throw DomainError("hankel_root: kR >= 5 required for the asymptotic seed");

  const Complex seed = hankel_root_seed(m, kr, opts.seed);
  const double h = opts.derivative_step;
  Complex nu = seed;
  Complex value = hankel1(nu, kr, opts.hankel);
  for (int it = 0; it <= opts.max_iterations; ++it) {
    if (std::abs(value) < tol) {
      if (!(nu.imag() > 0.0)) {
        throw ConvergenceError("hankel_root: converged to a root off the upper half-plane", nu, it);
      }
      return {m, nu, std::abs(value), it, seed};
    }
    if (it == opts.max_iterations) break;
    const Complex slope =
        (hankel1(nu + h, kr, opts.hankel) - hankel1(nu - h, kr, opts.hankel)) / (2.0 * h);
    if (slope == Complex(0.0, 0.0)) throw ConvergenceError("hankel_root: zero slope", nu, it);
    nu -= value / slope;
    if (!is_finite(nu)) throw ConvergenceError("hankel_root: iterate diverged", nu, it);
    value = hankel1(nu, kr, opts.hankel);
  }
  throw ConvergenceError("hankel_root: no convergence in " + std::to_string(opts.max_iterations) +
                             " iterations",
                         nu, opts.max_iterations);
}

}  // namespace creepwave::specfun
