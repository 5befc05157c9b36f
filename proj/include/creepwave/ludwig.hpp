// SPDX-License-Identifier: Apache-2.0
//
// Boundary-layer description of the field near the circular caustic of a unit
// sphere: the cubic phase ansatz, the mixed-type Ludwig system
//   |grad u|^2 + v |grad v|^2 = 1,  grad u . grad v = 0,
// its closed-form solutions on both sides of the caustic and the uniform
// Airy (CFUL) field built on them.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "creepwave/types.hpp"

namespace creepwave::ludwig {

struct BoundaryCoords {
  double u;  // tangential, phase-like
  double v;  // normal; v < 0 is the shadow of the caustic
};

enum class RegimeTag { Hyperbolic, Parabolic, Elliptic };

const char* to_string(RegimeTag tag) noexcept;

struct CausticRegime {
  RegimeTag tag;
  double discriminant;  // v J^2
};

struct FieldSample {
  BoundaryCoords coords;
  Complex phi_plus;
  Complex phi_minus;
  Complex psi;
};

/// u + v xi - xi^3 / 3.
double phase_function(double u, double v, double xi);

/// Phases on the two stationary branches xi = +-sqrt(v):
/// u +- (2/3) v^{3/2} for v >= 0, u -+ i (2/3)(-v)^{3/2} for v < 0.
std::pair<Complex, Complex> branch_phases(double u, double v);

/// Sign of the discriminant v J^2 of the characteristic equation.
/// DegenerateError when |jac| <= tol.
CausticRegime classify_regime(double v, double jac, double tol);

/// Slopes dr/dtheta of the two characteristics through a point with v > 0.
std::pair<double, double> characteristic_slopes(double r, double u_r, double u_theta, double v,
                                                double v_r, double v_theta);

/// Left-hand side of the characteristic quadratic at slope m.
double characteristic_quadratic(double r, double u_r, double u_theta, double v, double v_r,
                                double v_theta, double m);

/// e^{iku} [A0 k^{-1/3} Ai(-k^{2/3} v) + A1 (i k^{2/3})^{-1} Ai'(-k^{2/3} v)].
Complex cful_field(double u, double v, double k, Complex a0 = 1.0, Complex a1 = 0.0);

/// Two-ray form of cful_field with A1 = 0 for v > 0: Ai(-x) replaced by its
/// leading large-x expansion, written with the branch phases.
Complex cful_eikonal_limit(double u, double v, double k, Complex a0 = 1.0);

/// |A0| k^{-1/3} pi^{-1/2} (k^{2/3} v)^{-1/4}: the modulus scale of the
/// oscillating field for v > 0.
double cful_envelope(double v, double k, Complex a0 = 1.0);

/// Field sample at (u, v); the Ai' term is dropped in the shadow.
FieldSample field_sample(double u, double v, double k, Complex a0 = 1.0, Complex a1 = 0.0);

// ---------------------------------------------------------------------------
// Closed-form solutions with u = theta_0 (R = 1)
// ---------------------------------------------------------------------------

/// Shadow side, 0 < r < 1: (-v)^{3/2} = (3/2)[atanh(sqrt(1 - r^2)) - sqrt(1 - r^2)].
double shadow_v(double r);

/// dv/dr = sqrt((1/r^2 - 1) / (-v)) > 0; finite limit 2^{1/3} at r = 1.
double shadow_v_r(double r);

/// Lit side, r >= 1: (2/3) v^{3/2} = sqrt(r^2 - 1) - arccos(1/r).
double lit_v(double r);

/// dv/dr = sqrt((1 - 1/r^2) / v) on the lit side.
double lit_v_r(double r);

enum class ShadowMapping { Interior, Exterior };

/// u, v and their radial derivatives of the shadow solution at (r, theta).
/// Interior: v = shadow_v(r) on 0 < r < 1. Exterior: v = shadow_v(1/r) on r > 1.
/// The tangential coordinate is theta_0, i.e. theta for counter-clockwise rays and
/// 2 pi - theta for clockwise ones.
struct ShadowPoint {
  double u;
  double v;
  double u_theta;
  double v_r;
};

ShadowPoint shadow_solution(double r, double theta, Orientation orientation,
                            ShadowMapping mapping = ShadowMapping::Interior);

/// ((1 - y)/(1 + y))^{k/2} e^{k y}, 0 <= y < 1.
double evanescent_factor(double y, double k);

/// k^{-1/2} e^{i k theta_0} times the evanescent factor with y^2 = 1 - r^2
/// (Interior, 0 < r <= 1) or y^2 = 1 - 1/r^2 (Exterior, r >= 1).
Complex shadow_field(double r, double theta0, double k, ShadowMapping mapping);

struct CrCheck {
  double max_residual;
  double min_rho;
};

/// max |u_r - rho v_theta / r| + |u_theta + rho r v_r| over the interior nodes of
/// an (r, theta) grid, with rho = |grad u| / |grad v| and centered differences.
/// u and v are row-major, r index outer. DegenerateError if |grad v| < tol.
CrCheck check_generalized_cr(std::span<const double> r, std::span<const double> theta,
                             std::span<const double> u, std::span<const double> v,
                             double tol = 1e-12);

}  // namespace creepwave::ludwig
