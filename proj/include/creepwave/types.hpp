// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "creepwave/error.hpp"

namespace creepwave {

/// Complex scalar used for degrees, momenta and phases. NaN is never a value.
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws PrecisionError when `z` has a NaN or infinite component.
inline Complex checked(Complex z, const char* where) {
  if (!is_finite(z)) {
    throw PrecisionError(std::string(where) + ": non-finite result");
  }
  return z;
}

inline double checked(double x, const char* where) {
  if (!std::isfinite(x)) {
    throw PrecisionError(std::string(where) + ": non-finite result");
  }
  return x;
}

/// Sense of travel of a surface ray around the obstacle.
enum class Orientation { CounterClockwise, Clockwise };

const char* to_string(Orientation o) noexcept;

}  // namespace creepwave
