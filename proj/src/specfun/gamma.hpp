// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace creepwave::specfun::detail {

using ComplexL = std::complex<long double>;

/// log Gamma(z) on the principal branch for Re z > 0 (Stirling after an upward shift).
ComplexL log_gamma(ComplexL z);

/// sin(pi z), relatively accurate next to the integers: the nearest integer is
/// split off exactly before multiplying by pi.
ComplexL sin_pi(ComplexL z);

/// 1 / Gamma(z) for any complex z; zero at the non-positive integers.
ComplexL rgamma(ComplexL z);

}  // namespace creepwave::specfun::detail
