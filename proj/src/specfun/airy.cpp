// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>

#include "creepwave/specfun.hpp"

namespace creepwave::specfun {
namespace {

using quad = __float128;

// Ai(0) and -Ai'(0) as double-double pairs (exact to ~32 digits).
const quad kAi0 = static_cast<quad>(0.3550280538878172) + static_cast<quad>(2.05233632436212e-17);
const quad kMinusAip0 =
    static_cast<quad>(0.2588194037928068) + static_cast<quad>(-2.522243111610832e-17);

quad qabs(quad x) { return x < 0 ? -x : x; }

// Ai = c1 f - c2 g with
//   f = sum 3^k (1/3)_k t^{3k} / (3k)!,  g = sum 3^k (2/3)_k t^{3k+1} / (3k+1)!.
// The terms grow like exp((2/3)|t|^{3/2}) before they converge, hence binary128.
AiryValues maclaurin(double t_in) {
  const quad t = t_in;
  const quad t3 = t * t * t;
  const quad eps = static_cast<quad>(1e-36);

  quad f = 1, g = t, fp = 0, gp = 1;
  quad a = 1, b = t, da = t * t / 2, db = 1;
  fp = da;
  for (int k = 0; k < 400; ++k) {
    const quad kk = k;
    a *= t3 / ((3 * kk + 2) * (3 * kk + 3));
    b *= t3 / ((3 * kk + 3) * (3 * kk + 4));
    db *= t3 / ((3 * kk + 1) * (3 * kk + 3));
    if (k > 0) da *= t3 / ((3 * (kk) * (3 * kk + 2)));
    f += a;
    g += b;
    gp += db;
    if (k > 0) fp += da;
    const quad scale = qabs(f) + qabs(g) + qabs(fp) + qabs(gp);
    if (qabs(a) + qabs(b) + qabs(da) + qabs(db) < eps * scale) break;
  }
  return {static_cast<double>(kAi0 * f - kMinusAip0 * g),
          static_cast<double>(kAi0 * fp - kMinusAip0 * gp)};
}

// u_k of the Airy asymptotic series; v_k = -(6k+1)/(6k-1) u_k.
struct AsymptoticCoefficients {
  static constexpr int kCount = 60;
  double u[kCount];
  double v[kCount];
  AsymptoticCoefficients() {
    u[0] = 1.0;
    v[0] = 1.0;
    for (int k = 1; k < kCount; ++k) {
      // u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1))
      u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
             (216.0 * k * (2.0 * k - 1.0));
      v[k] = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u[k];
    }
  }
};

const AsymptoticCoefficients& coefficients() {
  static const AsymptoticCoefficients c;
  return c;
}

// Sums sum_k sign_k c_k zeta^{-k} over k = first, first+step, ... stopping at the
// smallest term (optimal truncation).
double truncated_sum(const double* c, double inv_zeta, int first, int step, bool alternate) {
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double power = std::pow(inv_zeta, first);
  const double power_step = std::pow(inv_zeta, step);
  int sign = 1;
  for (int k = first; k < AsymptoticCoefficients::kCount; k += step) {
    const double term = c[k] * power;
    if (std::fabs(term) > prev) break;
    sum += sign * term;
    prev = std::fabs(term);
    if (prev < 1e-18 * std::fabs(sum)) break;
    power *= power_step;
    if (alternate) sign = -sign;
  }
  return sum;
}

// zeta = (2/3) x^{3/2} as hi + lo. exp(-zeta) and cos(zeta - pi/4) magnify an
// error in zeta by zeta itself, so the rounding of hi is carried along.
struct Zeta {
  double hi;
  double lo;
};

Zeta zeta_of(double x) {
  const double s = std::sqrt(x);
  const double s_lo = std::fma(-s, s, x) / (2.0 * s);
  const double p = x * s;
  const double p_lo = std::fma(x, s, -p) + x * s_lo;
  const double two_p = 2.0 * p;
  const double hi = two_p / 3.0;
  const double lo = std::fma(-3.0, hi, two_p) / 3.0 + 2.0 * p_lo / 3.0;
  return {hi, lo};
}

AiryValues asymptotic_positive(double t) {
  const auto& c = coefficients();
  const Zeta z = zeta_of(t);
  const double zeta = z.hi;
  const double inv = 1.0 / zeta;
  const double q = std::pow(t, 0.25);
  const double e = std::exp(-z.hi) * (1.0 - z.lo) / (2.0 * std::sqrt(kPi));
  // sum (-1)^k u_k / zeta^k
  const double su = truncated_sum(c.u, inv, 0, 1, true);
  const double sv = truncated_sum(c.v, inv, 0, 1, true);
  return {e / q * su, -e * q * sv};
}

AiryValues asymptotic_negative(double t) {
  const auto& c = coefficients();
  const double x = -t;
  const Zeta z = zeta_of(x);
  const double zeta = z.hi;
  const double inv = 1.0 / zeta;
  const double q = std::pow(x, 0.25);
  // zeta - pi/4 with pi/4 = kQuarterPiHi + kQuarterPiLo.
  constexpr double kQuarterPiHi = 0.25 * kPi;
  constexpr double kQuarterPiLo = 3.061616997868383e-17;
  const double phase = z.hi - kQuarterPiHi;
  const double phase_lo = (z.hi - phase - kQuarterPiHi) + z.lo - kQuarterPiLo;
  const double c0 = std::cos(phase), s0 = std::sin(phase);
  const double cs = c0 - phase_lo * s0;
  const double sn = s0 + phase_lo * c0;
  const double pu = truncated_sum(c.u, inv, 0, 2, true);
  const double qu = truncated_sum(c.u, inv, 1, 2, true);
  const double pv = truncated_sum(c.v, inv, 0, 2, true);
  const double qv = truncated_sum(c.v, inv, 1, 2, true);
  const double norm = 1.0 / std::sqrt(kPi);
  return {norm / q * (cs * pu + sn * qu), norm * q * (sn * pv - cs * qv)};
}

}  // namespace

AiryValues airy(double t) {
  if (!std::isfinite(t)) throw DomainError("airy: argument must be finite");
  if (t < -kAiryOscillatoryLimit) {
    throw RangeError("airy: argument below the resolvable oscillatory range");
  }
  if (std::fabs(t) <= kAiryMaclaurinLimit) return maclaurin(t);
  return t > 0 ? asymptotic_positive(t) : asymptotic_negative(t);
}

double airy_ai(double t) { return airy(t).ai; }

double airy_ai_prime(double t) { return airy(t).ai_prime; }

}  // namespace creepwave::specfun
