// SPDX-License-Identifier: Apache-2.0
//
// Grazing rays leaving a sphere of radius R. Axes: Z along the incident beam,
// the launch point of the counter-clockwise meridian ray at (-R, 0, 0).
#pragma once

#include <array>

#include "creepwave/types.hpp"

namespace creepwave::geometry {

struct ObstacleSpec {
  double radius = 1.0;      // R
  double wavenumber = 1.0;  // k
  double leakage = 0.0;     // gamma_0, damping rate of the creeping wave

  /// Throws DomainError unless R > 0, k > 0, gamma_0 >= 0 (all finite).
  void validate() const;

  /// Geometric estimate of the first Hankel root, R (k + i gamma_0).
  Complex pole_degree() const { return radius * Complex(wavenumber, leakage); }
};

/// A meridian ray that has wound n times around the sphere.
struct SurfaceRay {
  Orientation orientation;
  int turns;
  double theta0;   // surface angle, unreduced
  double theta_s;  // scattering angle in (0, pi)
};

/// theta_0 = theta_s + 2 pi n (counter-clockwise) or 2 pi - theta_s + 2 pi n (clockwise).
/// theta_s = 0 and pi are rejected: the crossing phase is undefined on the axis.
SurfaceRay make_surface_ray(Orientation orientation, int turns, double theta_s);

using Vec3 = std::array<double, 3>;

struct RayPoint {
  Vec3 position;
  double tau;
};

double norm(const Vec3& v);

/// r_0(theta_0, phi_0) + tau p_0(theta_0, phi_0); tau >= 0.
RayPoint ray_point(double theta0, double phi0, double tau, const ObstacleSpec& spec);

/// Determinant of d(x, y, z)/d(theta_0, phi_0, tau): tau (R cos theta_0 - tau sin theta_0).
double ray_jacobian(double theta0, double tau, const ObstacleSpec& spec);

enum class CausticKind { SurfaceCaustic, AxialCausticPlus, AxialCausticMinus, Regular };

const char* to_string(CausticKind kind) noexcept;

/// Surface caustic at tau = 0; axial caustic at tau = R cot theta_0, on the
/// forward semiaxis for theta_0 mod 2 pi in [0, pi] and the backward one otherwise.
CausticKind classify_caustic_point(double theta0, double tau, const ObstacleSpec& spec,
                                   double tol);

/// Crossings of the axial caustic made by a ray of winding number n:
/// 2n + 1 for n >= 0, -2n for n < 0.
int winding_to_crossing(int n);

/// Accumulated phase after those crossings: -(pi/2)(2n + 1) for n >= 0,
/// (pi/2)(-2n) for n < 0.
double crossing_phase(int n);

}  // namespace creepwave::geometry
