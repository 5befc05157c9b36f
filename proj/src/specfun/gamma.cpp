// SPDX-License-Identifier: Apache-2.0
#include "specfun/gamma.hpp"

#include <cmath>

namespace creepwave::specfun::detail {
namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617639L;

// B_{2n} / (2n (2n-1)), n = 1..10
constexpr long double kStirling[] = {
    1.0L / 12.0L,          -1.0L / 360.0L,          1.0L / 1260.0L,
    -1.0L / 1680.0L,       1.0L / 1188.0L,          -691.0L / 360360.0L,
    1.0L / 156.0L,         -3617.0L / 122400.0L,    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
};

}  // namespace

ComplexL log_gamma(ComplexL z) {
  // Shift so the asymptotic series is accurate to long-double precision.
  ComplexL shift_log = 0.0L;
  while (z.real() < 20.0L) {
    shift_log += std::log(z);
    z += 1.0L;
  }
  const ComplexL inv = 1.0L / z;
  const ComplexL inv2 = inv * inv;
  ComplexL series = 0.0L;
  ComplexL power = inv;
  for (long double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + kHalfLog2Pi + series - shift_log;
}

ComplexL sin_pi(ComplexL z) {
  const long double n = std::round(z.real());
  const ComplexL f(z.real() - n, z.imag());
  const ComplexL s = std::sin(kPiL * f);
  return std::fmod(std::fabs(n), 2.0L) == 1.0L ? -s : s;
}

ComplexL rgamma(ComplexL z) {
  if (z.real() >= 0.5L) return std::exp(-log_gamma(z));
  // 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi
  return sin_pi(z) / kPiL * std::exp(log_gamma(1.0L - z));
}

}  // namespace creepwave::specfun::detail
