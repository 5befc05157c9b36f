// SPDX-License-Identifier: Apache-2.0
#include "creepwave/ludwig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "creepwave/specfun.hpp"

namespace creepwave::ludwig {
namespace {

const double kCbrt2 = std::cbrt(2.0);

// atanh(y) - y and w - atan(w) lose everything to cancellation near 0; both are
// odd series starting at the cubic term.
double atanh_minus_identity(double y, double log_ratio) {
  if (y < 0.3) {
    double term = y * y * y, sum = 0.0;
    const double y2 = y * y;
    for (int n = 3; n < 80 && term > 1e-18 * sum; n += 2) {
      sum += term / n;
      term *= y2;
    }
    return sum;
  }
  return log_ratio - y;
}

double identity_minus_atan(double w) {
  if (w < 0.3) {
    double term = w * w * w, sum = 0.0;
    const double w2 = w * w;
    for (int n = 3; n < 80 && term > 1e-18 * std::fabs(sum); n += 2) {
      sum += (n % 4 == 3 ? term : -term) / n;
      term *= w2;
    }
    return sum;
  }
  return w - std::atan(w);
}

// k (y - atanh y), with 1 - y^2 = s^2 supplied so atanh y = log((1 + y) / s) stays exact.
double evanescent_exponent(double y, double s, double k) {
  return -k * atanh_minus_identity(y, std::log1p(y) - std::log(s));
}

}  // namespace

const char* to_string(RegimeTag tag) noexcept {
  switch (tag) {
    case RegimeTag::Hyperbolic: return "hyperbolic";
    case RegimeTag::Parabolic: return "parabolic";
    case RegimeTag::Elliptic: return "elliptic";
  }
  return "?";
}

double phase_function(double u, double v, double xi) { return u + v * xi - xi * xi * xi / 3.0; }

std::pair<Complex, Complex> branch_phases(double u, double v) {
  if (v >= 0.0) {
    const double w = 2.0 / 3.0 * v * std::sqrt(v);
    return {Complex(u + w, 0.0), Complex(u - w, 0.0)};
  }
  const double w = 2.0 / 3.0 * (-v) * std::sqrt(-v);
  return {Complex(u, -w), Complex(u, w)};
}

CausticRegime classify_regime(double v, double jac, double tol) {
  if (!(tol > 0.0)) throw DomainError("classify_regime: tolerance must be > 0");
  if (!(std::fabs(jac) > tol)) {
    throw DegenerateError("classify_regime: vanishing Jacobian, characteristics undefined");
  }
  const double disc = v * jac * jac;
  if (std::fabs(disc) < tol) return {RegimeTag::Parabolic, disc};
  return {disc > 0.0 ? RegimeTag::Hyperbolic : RegimeTag::Elliptic, disc};
}

std::pair<double, double> characteristic_slopes(double r, double u_r, double u_theta, double v,
                                                double v_r, double v_theta) {
  if (!(v > 0.0)) throw DomainError("characteristic_slopes: real characteristics need v > 0");
  const double s = std::sqrt(v);
  const double plus = r * r * (u_r + s * v_r) / (u_theta + s * v_theta);
  const double minus = r * r * (u_r - s * v_r) / (u_theta - s * v_theta);
  return {plus, minus};
}

double characteristic_quadratic(double r, double u_r, double u_theta, double v, double v_r,
                                double v_theta, double m) {
  return (u_theta * u_theta - v * v_theta * v_theta) / (r * r) * m * m -
         2.0 * (u_r * u_theta - v * v_r * v_theta) * m + r * r * (u_r * u_r - v * v_r * v_r);
}

Complex cful_field(double u, double v, double k, Complex a0, Complex a1) {
  if (!(k > 0.0)) throw DomainError("cful_field: k must be > 0");
  const double k23 = std::cbrt(k * k);
  const specfun::AiryValues ai = specfun::airy(-k23 * v);
  const Complex bracket = a0 / std::cbrt(k) * ai.ai + a1 / (kI * k23) * ai.ai_prime;
  return checked(std::polar(1.0, k * u) * bracket, "cful_field");
}

Complex cful_eikonal_limit(double u, double v, double k, Complex a0) {
  if (!(k > 0.0)) throw DomainError("cful_eikonal_limit: k must be > 0");
  if (!(v > 0.0)) throw DomainError("cful_eikonal_limit: two real rays need v > 0");
  const auto [plus, minus] = branch_phases(u, v);
  const double x = std::cbrt(k * k) * v;
  const double scale = 1.0 / (2.0 * std::sqrt(kPi) * std::pow(x, 0.25) * std::cbrt(k));
  const Complex waves =
      std::polar(1.0, k * plus.real() - 0.25 * kPi) + std::polar(1.0, k * minus.real() + 0.25 * kPi);
  return a0 * scale * waves;
}

double cful_envelope(double v, double k, Complex a0) {
  if (!(k > 0.0) || !(v > 0.0)) throw DomainError("cful_envelope: needs k > 0 and v > 0");
  const double x = std::cbrt(k * k) * v;
  return std::abs(a0) / (std::cbrt(k) * std::sqrt(kPi) * std::pow(x, 0.25));
}

FieldSample field_sample(double u, double v, double k, Complex a0, Complex a1) {
  const auto [plus, minus] = branch_phases(u, v);
  const Complex psi = cful_field(u, v, k, a0, v < 0.0 ? Complex(0.0) : a1);
  return {{u, v}, plus, minus, psi};
}

double shadow_v(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("shadow_v: r must lie in (0, 1)");
  const double y = std::sqrt((1.0 - r) * (1.0 + r));
  const double gap = atanh_minus_identity(y, std::log1p(y) - std::log(r));
  return -std::pow(1.5 * gap, 2.0 / 3.0);
}

double shadow_v_r(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("shadow_v_r: r must lie in (0, 1]");
  if (r == 1.0) return kCbrt2;
  const double y2 = (1.0 - r) * (1.0 + r);
  return std::sqrt(y2 / (r * r * -shadow_v(r)));
}

double lit_v(double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("lit_v: r must be >= 1");
  const double w = std::sqrt((r - 1.0) * (r + 1.0));
  return std::pow(1.5 * identity_minus_atan(w), 2.0 / 3.0);
}

double lit_v_r(double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("lit_v_r: r must be >= 1");
  if (r == 1.0) return kCbrt2;
  const double w2 = (r - 1.0) * (r + 1.0);
  return std::sqrt(w2 / (r * r * lit_v(r)));
}

ShadowPoint shadow_solution(double r, double theta, Orientation orientation,
                            ShadowMapping mapping) {
  const bool ccw = orientation == Orientation::CounterClockwise;
  const double u = ccw ? theta : 2.0 * kPi - theta;
  const double u_theta = ccw ? 1.0 : -1.0;
  if (mapping == ShadowMapping::Interior) {
    return {u, shadow_v(r), u_theta, shadow_v_r(r)};
  }
  if (!(r > 1.0)) throw DomainError("shadow_solution: exterior mapping needs r > 1");
  const double inv = 1.0 / r;
  return {u, shadow_v(inv), u_theta, -shadow_v_r(inv) * inv * inv};
}

double evanescent_factor(double y, double k) {
  if (!(k > 0.0)) throw DomainError("evanescent_factor: k must be > 0");
  if (!(y >= 0.0)) throw DomainError("evanescent_factor: y must be >= 0");
  if (!(y < 1.0)) throw DomainError("evanescent_factor: y >= 1 (limit is 0)");
  const double s = std::sqrt((1.0 - y) * (1.0 + y));
  return std::exp(evanescent_exponent(y, s, k));
}

Complex shadow_field(double r, double theta0, double k, ShadowMapping mapping) {
  if (!(k > 0.0)) throw DomainError("shadow_field: k must be > 0");
  double y, s;  // y^2 + s^2 = 1
  if (mapping == ShadowMapping::Interior) {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("shadow_field: interior mapping needs 0 < r <= 1");
    s = r;
    y = std::sqrt((1.0 - r) * (1.0 + r));
  } else {
    if (!(r >= 1.0) || !std::isfinite(r)) {
      throw DomainError("shadow_field: exterior mapping needs r >= 1");
    }
    s = 1.0 / r;
    y = std::sqrt((1.0 - s) * (1.0 + s));
  }
  const double damping = y == 0.0 ? 1.0 : std::exp(evanescent_exponent(y, s, k));
  return std::polar(damping / std::sqrt(k), k * theta0);
}

CrCheck check_generalized_cr(std::span<const double> r, std::span<const double> theta,
                             std::span<const double> u, std::span<const double> v, double tol) {
  const std::size_t nr = r.size(), nt = theta.size();
  if (nr < 3 || nt < 3) throw DomainError("check_generalized_cr: grid needs at least 3x3 nodes");
  if (u.size() != nr * nt || v.size() != nr * nt) {
    throw DomainError("check_generalized_cr: field size does not match the grid");
  }
  auto at = [nt](std::span<const double> f, std::size_t i, std::size_t j) { return f[i * nt + j]; };

  CrCheck out{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 1; i + 1 < nr; ++i) {
    const double dr = r[i + 1] - r[i - 1];
    for (std::size_t j = 1; j + 1 < nt; ++j) {
      const double dt = theta[j + 1] - theta[j - 1];
      if (!(at(v, i, j) < 0.0)) throw DomainError("check_generalized_cr: v must be < 0 on the grid");
      const double u_r = (at(u, i + 1, j) - at(u, i - 1, j)) / dr;
      const double v_r = (at(v, i + 1, j) - at(v, i - 1, j)) / dr;
      const double u_t = (at(u, i, j + 1) - at(u, i, j - 1)) / dt;
      const double v_t = (at(v, i, j + 1) - at(v, i, j - 1)) / dt;
      const double grad_u = std::hypot(u_r, u_t / r[i]);
      const double grad_v = std::hypot(v_r, v_t / r[i]);
      if (grad_v < tol) throw DegenerateError("check_generalized_cr: |grad v| vanishes");
      const double rho = grad_u / grad_v;
      const double res =
          std::fabs(u_r - rho * v_t / r[i]) + std::fabs(u_t + rho * r[i] * v_r);
      out.max_residual = std::max(out.max_residual, res);
      out.min_rho = std::min(out.min_rho, rho);
    }
  }
  return out;
}

}  // namespace creepwave::ludwig
