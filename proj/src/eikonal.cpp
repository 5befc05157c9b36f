// SPDX-License-Identifier: Apache-2.0
#include "creepwave/eikonal.hpp"

#include <cmath>
#include <limits>

namespace creepwave::eikonal {
namespace {

void check_line(const RotationalLine& line) {
  if (!(line.inertia > 0.0) || !std::isfinite(line.inertia)) {
    throw DomainError("rotational line: moment of inertia must be > 0");
  }
}

}  // namespace

AngularWave angular_wave(int l) {
  if (l < 0) throw DomainError("angular_wave: l must be non-negative");
  return {l, quantized_momentum(l)};
}

double eikonal_amplitude(double theta, double tol) {
  if (!std::isfinite(theta)) throw DomainError("eikonal_amplitude: angle must be finite");
  const double s = std::fabs(std::sin(theta));
  const double band = tol + 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(theta);
  if (s < band) throw SingularityError("eikonal_amplitude: conjugate point, ray tube collapses");
  return 1.0 / std::sqrt(s);
}

double apply_crossing_shift(double phase, Orientation orientation) {
  return orientation == Orientation::CounterClockwise ? phase - 0.5 * kPi : phase + 0.5 * kPi;
}

double quantized_momentum(int l) {
  if (l < 0) throw DomainError("quantized_momentum: l must be non-negative");
  return l + 0.5;
}

double bound_state_wavefunction(int l, double theta, double tol) {
  const double L = quantized_momentum(l);
  const double a = eikonal_amplitude(theta, tol);
  return a * std::cos(L * (theta - kPi) - 0.25 * kPi);
}

Complex two_wave_sum(int l, double theta, double tol) {
  const double L = quantized_momentum(l);
  const double a = eikonal_amplitude(theta, tol);
  const double forward = L * theta;
  const double backward = apply_crossing_shift(L * (2.0 * kPi - theta), Orientation::Clockwise);
  return a * (std::polar(1.0, forward) + std::polar(1.0, backward));
}

Complex two_wave_prefactor(int l) {
  const double sign = l % 2 == 0 ? 1.0 : -1.0;
  return 2.0 * sign * std::polar(1.0, 0.75 * kPi);
}

CircuitLedger circuit_ledger(int l) {
  // Counted in units of i pi, where every term is an exact integer; radians only at the end.
  const double L = quantized_momentum(l);
  const double amplitude_turns = 2.0 * -0.5;
  const double phase_turns = 2.0 * L;
  return {Complex(0.0, kPi * amplitude_turns), Complex(0.0, kPi * phase_turns),
          Complex(0.0, kPi * (amplitude_turns + phase_turns))};
}

double rotational_energy(const RotationalLine& line, double alpha) {
  check_line(line);
  return (alpha * (alpha + 1.0) - line.intercept) / (2.0 * line.inertia);
}

double alpha_of_energy(const RotationalLine& line, double energy) {
  check_line(line);
  const double rhs = 2.0 * line.inertia * energy + line.intercept;
  const double disc = 0.25 + rhs;
  if (disc < 0.0) throw DomainError("alpha_of_energy: no real angular momentum at this energy");
  return -0.5 + std::sqrt(disc);
}

}  // namespace creepwave::eikonal
