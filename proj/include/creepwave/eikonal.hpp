// SPDX-License-Identifier: Apache-2.0
//
// Angular eikonal waves on the unit sphere, their continuation through the
// antipodal conjugate points, and the orbiting bound states that follow.
#pragma once

#include "creepwave/types.hpp"

namespace creepwave::eikonal {

/// Below this |sin theta| the geometric amplitude is refused.
inline constexpr double kConjugateTolerance = 1e-12;

struct AngularWave {
  int l;
  double momentum;  // L = l + 1/2
  Complex normalization{1.0, 0.0};
};

AngularWave angular_wave(int l);

/// |sin theta|^{-1/2}. SingularityError within tol of a conjugate point; the band
/// is widened by the rounding of theta itself.
double eikonal_amplitude(double theta, double tol = kConjugateTolerance);

/// Phase after one crossing of a conjugate point: -pi/2 counter-clockwise, +pi/2 clockwise.
double apply_crossing_shift(double phase, Orientation orientation);

/// l + 1/2.
double quantized_momentum(int l);

/// |sin(theta - pi)|^{-1/2} cos[(l + 1/2)(theta - pi) - pi/4], unit normalization.
double bound_state_wavefunction(int l, double theta, double tol = kConjugateTolerance);

/// A(theta) [e^{i L theta} + e^{i(L(2 pi - theta) + pi/2)}]: the counter-clockwise
/// wave plus the clockwise one after its crossing shift.
Complex two_wave_sum(int l, double theta, double tol = kConjugateTolerance);

/// Constant relating two_wave_sum to bound_state_wavefunction: 2 (-1)^l e^{3 i pi/4}.
Complex two_wave_prefactor(int l);

/// Variations accumulated over one counter-clockwise circuit 0 -> 2 pi.
struct CircuitLedger {
  Complex amplitude_log;  // two conjugate points, -i pi/2 each
  Complex phase;          // i 2 pi L
  Complex total;          // must equal i 2 pi l
};

CircuitLedger circuit_ledger(int l);

struct RotationalLine {
  double inertia;    // I = mu R^2
  double intercept;  // c_0
};

/// E = (alpha (alpha + 1) - c_0) / (2 I).
double rotational_energy(const RotationalLine& line, double alpha);

/// Larger root alpha of alpha (alpha + 1) = 2 I E + c_0; DomainError when
/// the right-hand side is below -1/4.
double alpha_of_energy(const RotationalLine& line, double energy);

}  // namespace creepwave::eikonal
