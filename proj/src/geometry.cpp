// SPDX-License-Identifier: Apache-2.0
#include "creepwave/geometry.hpp"

#include <cmath>

namespace creepwave::geometry {

void ObstacleSpec::validate() const {
  if (!(std::isfinite(radius) && radius > 0.0)) throw DomainError("obstacle radius must be > 0");
  if (!(std::isfinite(wavenumber) && wavenumber > 0.0)) {
    throw DomainError("wavenumber must be > 0");
  }
  if (!(std::isfinite(leakage) && leakage >= 0.0)) throw DomainError("leakage rate must be >= 0");
}

SurfaceRay make_surface_ray(Orientation orientation, int turns, double theta_s) {
  if (turns < 0) throw DomainError("make_surface_ray: turn count must be non-negative");
  if (!(theta_s > 0.0 && theta_s < kPi)) {
    throw DomainError("make_surface_ray: scattering angle must lie in (0, pi)");
  }
  const double wound = 2.0 * kPi * turns;
  const double theta0 =
      orientation == Orientation::CounterClockwise ? theta_s + wound : 2.0 * kPi - theta_s + wound;
  return {orientation, turns, theta0, theta_s};
}

double norm(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

RayPoint ray_point(double theta0, double phi0, double tau, const ObstacleSpec& spec) {
  if (!(tau >= 0.0)) throw DomainError("ray_point: tau must be >= 0");
  const double r = spec.radius;
  const double ct = std::cos(theta0), st = std::sin(theta0);
  const double cp = std::cos(phi0), sp = std::sin(phi0);
  return {{(-r * ct + tau * st) * cp, (r * ct - tau * st) * sp, r * st + tau * ct}, tau};
}

double ray_jacobian(double theta0, double tau, const ObstacleSpec& spec) {
  return tau * (spec.radius * std::cos(theta0) - tau * std::sin(theta0));
}

const char* to_string(CausticKind kind) noexcept {
  switch (kind) {
    case CausticKind::SurfaceCaustic: return "surface";
    case CausticKind::AxialCausticPlus: return "axial+";
    case CausticKind::AxialCausticMinus: return "axial-";
    case CausticKind::Regular: return "regular";
  }
  return "?";
}

CausticKind classify_caustic_point(double theta0, double tau, const ObstacleSpec& spec,
                                   double tol) {
  if (!(tol > 0.0)) throw DomainError("classify_caustic_point: tolerance must be > 0");
  if (std::fabs(tau) < tol) return CausticKind::SurfaceCaustic;
  // Compare tau sin - R cos against tol sin instead of forming cot, which is
  // singular at theta_0 = 0 and pi.
  const double st = std::sin(theta0);
  if (std::fabs(tau * st - spec.radius * std::cos(theta0)) < tol * std::fabs(st)) {
    double reduced = std::fmod(theta0, 2.0 * kPi);
    if (reduced < 0.0) reduced += 2.0 * kPi;
    return reduced <= kPi ? CausticKind::AxialCausticPlus : CausticKind::AxialCausticMinus;
  }
  return CausticKind::Regular;
}

int winding_to_crossing(int n) { return n >= 0 ? 2 * n + 1 : -2 * n; }

double crossing_phase(int n) {
  return n >= 0 ? -0.5 * kPi * (2.0 * n + 1.0) : 0.5 * kPi * (-2.0 * n);
}

}  // namespace creepwave::geometry
