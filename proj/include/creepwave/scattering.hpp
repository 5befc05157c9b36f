// SPDX-License-Identifier: Apache-2.0
//
// Creeping-wave amplitudes for a sphere and the single-pole orbiting resonances.
//
// The pole degree nu_0 enters every amplitude; the overloads taking an
// ObstacleSpec use the geometric estimate R (k + i gamma_0).
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "creepwave/eikonal.hpp"
#include "creepwave/geometry.hpp"
#include "creepwave/specfun.hpp"
#include "creepwave/types.hpp"

namespace creepwave::scattering {

using geometry::ObstacleSpec;

/// lambda = alpha + i beta.
struct ComplexMomentum {
  double alpha;
  double beta;

  Complex value() const { return {alpha, beta}; }
};

/// lambda = nu_0 - 1/2.
ComplexMomentum momentum_from_degree(Complex nu0);

// ---------------------------------------------------------------------------
// Transport along the surface
// ---------------------------------------------------------------------------

inline constexpr double kCosineTolerance = 1e-12;

/// |cos theta_0|^{-1/2} e^{-gamma_0 R theta_0}; SingularityError where |cos theta_0| < tol.
double leaky_amplitude(double theta0, const ObstacleSpec& spec, double tol = kCosineTolerance);

// ---------------------------------------------------------------------------
// Amplitudes
// ---------------------------------------------------------------------------

struct SingleTurn {
  Complex plus;   // counter-clockwise, one caustic crossing
  Complex minus;  // clockwise, two crossings
};

/// f_0^+ = C e^{-i pi/2} e^{i nu_0 theta_s} / sqrt(sin theta_s),
/// f_0^- = -C e^{i nu_0 (2 pi - theta_s)} / sqrt(sin theta_s).
SingleTurn single_turn_amplitudes(double theta_s, Complex nu0, Complex c = 1.0);
SingleTurn single_turn_amplitudes(double theta_s, const ObstacleSpec& spec, Complex c = 1.0);

struct MultiTurn {
  Complex value;
  double tail_bound;  // bound on |full sum - partial sum|; infinite when Im nu_0 <= 0
  bool convergent;    // false when Im nu_0 <= 0 (undamped orbits)
};

/// Sum over n = 0..N of (-1)^n e^{2 pi i n nu_0} (f_0^+ + f_0^-).
MultiTurn multi_turn_amplitude(double theta_s, Complex nu0, Complex c, int turns);
MultiTurn multi_turn_amplitude(double theta_s, const ObstacleSpec& spec, Complex c, int turns);

/// Closed form of the infinite turn sum,
/// -C e^{i pi/4} [e^{-i(nu_0 (pi - theta_s) - pi/4)} + e^{i(nu_0 (pi - theta_s) - pi/4)}]
///   / (2 cos(pi nu_0) sqrt(sin theta_s)).
/// Also defined for real nu_0, where the turn sum itself diverges.
/// PoleError when cos(pi nu_0) vanishes to within pole_tol.
Complex resummed_amplitude(double theta_s, Complex nu0, Complex c = 1.0,
                           double pole_tol = 1e-14);
Complex resummed_amplitude(double theta_s, const ObstacleSpec& spec, Complex c = 1.0);

/// Sum of resummed_amplitude over several poles (e.g. refined Hankel roots).
Complex multi_mode_amplitude(double theta_s, std::span<const Complex> degrees, Complex c = 1.0);

/// Partial sum e^{i pi nu} sum_{n=0}^{N} (-1)^n e^{2 pi i n nu} of 1 / (2 cos pi nu).
Complex turn_series_partial_sum(Complex nu, int turns);

/// G = C e^{i pi/4} (sqrt(pi)/2) sqrt(2 lambda + 1).
Complex legendre_prefactor(ComplexMomentum lambda, Complex c = 1.0);

inline constexpr double kForwardCutoff = 0.1;

/// G P_lambda(-cos theta_s) / sin(pi lambda). ValidityError for theta_s < theta_min,
/// where the representation breaks down.
Complex legendre_amplitude(double theta_s, ComplexMomentum lambda, Complex g,
                           double theta_min = kForwardCutoff,
                           const specfun::LegendreOptions& opts = {});
Complex legendre_amplitude(double theta_s, const ObstacleSpec& spec, Complex c = 1.0,
                           double theta_min = kForwardCutoff);

struct AmplitudeScan {
  std::vector<double> theta_s;
  std::vector<Complex> f;
  std::vector<double> sigma;  // |f|^2
};

/// Evaluates `amplitude` on every angle of the grid (each strictly inside (0, pi)).
AmplitudeScan scan_amplitude(std::span<const double> theta_s,
                             const std::function<Complex(double)>& amplitude);

// ---------------------------------------------------------------------------
// Orbiting resonances
// ---------------------------------------------------------------------------

/// a_l = C(E)/pi / ((lambda - l)(lambda + l + 1)) with the unitarity choice
/// C(E) = -(pi/k) beta (2 alpha + 1), k = sqrt(E).
Complex resonance_partial_wave(int l, ComplexMomentum lambda, double energy,
                               double pole_tol = 1e-14);

/// arcsin of beta (2 alpha + 1) / sqrt([(l - alpha)^2 + beta^2][(l + alpha + 1)^2 + beta^2]).
/// The principal branch never exceeds pi/2.
/// ConsistencyError when the argument leaves [-1, 1] by more than 1e-12.
double resonance_phase_shift(int l, ComplexMomentum lambda);

/// The same phase shift continued through pi/2: pi - arg[(lambda - l)(lambda + l + 1)],
/// in (0, pi) for beta > 0. e^{2 i delta} = 1 + 2 i k a_l.
double resonance_phase_shift_continuous(int l, ComplexMomentum lambda);

struct ResonanceEntry {
  int l;
  double energy;
  double delta;
  bool upward;
};

struct ResonanceScan {
  std::vector<ResonanceEntry> resonances;  // upward pi/2 crossings, sorted by E
  std::vector<ResonanceEntry> echoes;      // downward crossings, sorted by E
};

using MomentumOfEnergy = std::function<ComplexMomentum(double)>;

/// alpha(E) from the rotational line and a constant width beta.
MomentumOfEnergy rotational_trajectory(const eikonal::RotationalLine& line, double beta);

/// Crossings of delta_l(E) through pi/2 on each grid interval, refined by
/// bisection to `tol` in E. The grid must be positive and strictly increasing.
ResonanceScan scan_resonances(const MomentumOfEnergy& lambda_of_e, int l_min, int l_max,
                              std::span<const double> energies, double tol = 1e-10);

}  // namespace creepwave::scattering
