// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "creepwave/quadrature.hpp"
#include "creepwave/specfun.hpp"

namespace creepwave::specfun {
namespace {

using ComplexL = std::complex<long double>;

constexpr int kPanelNodes = 32;

void check_argument(double z, const char* where) {
  if (!std::isfinite(z)) throw DomainError(std::string(where) + ": argument must be finite");
  if (z <= -1.0) {
    throw DomainError(std::string(where) + ": logarithmic singularity at z = -1");
  }
  if (z > 1.0) throw DomainError(std::string(where) + ": argument above 1");
}

}  // namespace

LegendreSeries legendre_p_series(Complex lambda, double z, const LegendreOptions& opts) {
  check_argument(z, "legendre_p_series");
  if (!is_finite(lambda)) throw DomainError("legendre_p_series: degree must be finite");
  const long double x = (1.0L - z) / 2.0L;
  const ComplexL lam(lambda.real(), lambda.imag());

  ComplexL term = 1.0L;
  ComplexL sum = 1.0L;
  long double max_term = 1.0L;
  for (int k = 0; k < opts.max_terms; ++k) {
    const long double kk = k;
    term *= (kk - lam) * (kk + lam + 1.0L) / ((kk + 1.0L) * (kk + 1.0L)) * x;
    sum += term;
    const long double mag = std::abs(term);
    max_term = std::max(max_term, mag);
    if (mag == 0.0L || mag < opts.tolerance * std::abs(sum)) {
      const Complex value(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
      const double sum_mag = std::abs(value);
      const double condition =
          sum_mag > 0.0 ? static_cast<double>(max_term) / sum_mag
                        : std::numeric_limits<double>::infinity();
      return {checked(value, "legendre_p_series"), k + 1, condition};
    }
  }
  throw PrecisionError("legendre_p_series: term budget exhausted before convergence",
                       Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())));
}

// P_lambda(cos theta) = (sqrt 2 / pi) int_0^theta cos((lambda + 1/2) phi) / sqrt(cos phi - cos theta) dphi
// with phi = theta (1 - s^2); the s^2 substitution removes the endpoint root singularity.
Complex legendre_p_integral(Complex lambda, double z) {
  check_argument(z, "legendre_p_integral");
  if (!is_finite(lambda)) throw DomainError("legendre_p_integral: degree must be finite");
  if (z == 1.0) return 1.0;
  const double theta = std::acos(z);
  const double delta = std::acos(-z);  // pi - theta without cancellation near z = -1
  const Complex mu = lambda + 0.5;

  auto integrand = [&](double s) -> Complex {
    const double b = 0.5 * theta * s * s;
    const double sinc_b = b < 1e-8 ? 1.0 - b * b / 6.0 : std::sin(b) / b;
    const double a = std::sin(delta + b);
    // 2 theta s / sqrt(2 sin a sin b), with s / sqrt(sin b) = 1 / sqrt((theta/2) sinc b)
    const double weight = 2.0 * theta / std::sqrt(a * theta * sinc_b);
    return weight * std::cos(mu * (theta * (1.0 - s * s)));
  };

  // Uniform panels resolve the oscillation; geometric ones resolve the scale
  // sqrt(delta/theta) where sin(delta + b) turns over near z = -1.
  const double cycles = std::abs(mu) * theta / kPi;
  const int uniform = std::max(4, static_cast<int>(std::ceil(2.0 * cycles)) + 2);
  std::vector<double> breaks;
  breaks.reserve(static_cast<size_t>(uniform) + 64);
  for (int i = 0; i <= uniform; ++i) breaks.push_back(static_cast<double>(i) / uniform);
  const double inner = 0.05 * std::sqrt(delta / theta);
  for (double s = 0.5 / uniform; s > inner && s > 1e-12; s *= 0.5) breaks.push_back(s);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const auto& rule = quad::gauss_legendre(kPanelNodes);
  const Complex integral = quad::integrate_panels(integrand, breaks, rule);
  return checked(std::sqrt(2.0) / kPi * integral, "legendre_p_integral");
}

Complex legendre_p(Complex lambda, double z, const LegendreOptions& opts) {
  check_argument(z, "legendre_p");
  switch (opts.method) {
    case LegendreMethod::Series:
      return legendre_p_series(lambda, z, opts).value;
    case LegendreMethod::Integral:
      return legendre_p_integral(lambda, z);
    case LegendreMethod::Auto:
      break;
  }
  if ((1.0 - z) / 2.0 <= opts.series_reach) {
    try {
      const LegendreSeries s = legendre_p_series(lambda, z, opts);
      if (s.condition <= opts.max_condition) return s.value;
    } catch (const PrecisionError&) {
      // fall through to the integral
    }
  }
  return legendre_p_integral(lambda, z);
}

double legendre_polynomial(int l, double z) {
  if (l < 0) throw DomainError("legendre_polynomial: degree must be non-negative");
  if (l == 0) return 1.0;
  double p0 = 1.0, p1 = z;
  for (int n = 1; n < l; ++n) {
    const double p2 = ((2.0 * n + 1.0) * z * p1 - n * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

Complex legendre_projection(Complex lambda, int l, double pole_tol) {
  if (l < 0) throw DomainError("legendre_projection: l must be non-negative");
  const Complex a = lambda - static_cast<double>(l);
  const Complex b = lambda + static_cast<double>(l) + 1.0;
  if (std::abs(a) < pole_tol || std::abs(b) < pole_tol) {
    throw PoleError("legendre_projection: degree sits on a pole of the projection");
  }
  return checked(std::sin(kPi * lambda) / (kPi * a * b), "legendre_projection");
}

}  // namespace creepwave::specfun
