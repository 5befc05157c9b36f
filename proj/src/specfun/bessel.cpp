// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "creepwave/specfun.hpp"
#include "specfun/gamma.hpp"

namespace creepwave::specfun {
namespace {

using detail::ComplexL;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kEpsL = std::numeric_limits<long double>::epsilon();
constexpr int kMaxSeriesTerms = 2000;

struct Estimate {
  ComplexL value;
  long double error;
};

void check_arguments(Complex nu, double x, const HankelOptions& opts, const char* where) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(where) + ": argument must be positive and finite");
  }
  if (!is_finite(nu)) throw DomainError(std::string(where) + ": order must be finite");
  if (std::abs(nu) > opts.max_order) {
    throw DomainError(std::string(where) + ": |order| exceeds the configured limit");
  }
}

bool near_integer(Complex nu, const HankelOptions& opts) {
  return std::abs(nu - Complex(std::round(nu.real()), 0.0)) < opts.integer_epsilon;
}

// f(nu) from f(nu + i d) and f(nu - i d): the mean is off by O(d^2) for an entire f.
// The spread of the two times d is added to the error estimate as a proxy of that bias.
template <class F>
Estimate symmetric_shift(F&& f, Complex nu, const HankelOptions& opts) {
  const Estimate up = f(ComplexL(nu.real(), nu.imag() + opts.integer_shift));
  const Estimate down = f(ComplexL(nu.real(), nu.imag() - opts.integer_shift));
  const ComplexL mean = 0.5L * (up.value + down.value);
  const long double spread = std::abs(up.value - down.value);
  const long double shift = opts.integer_shift;
  return {mean, 0.5L * (up.error + down.error) + spread * shift};
}

// sum_k (-1)^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1))
Estimate j_series(ComplexL nu, long double x) {
  const long double half = x / 2.0L;
  const long double q = -half * half;
  ComplexL term = std::exp(nu * std::log(half)) * detail::rgamma(nu + 1.0L);
  ComplexL sum = term;
  long double max_term = std::abs(term);
  int k = 1;
  for (; k < kMaxSeriesTerms; ++k) {
    term *= q / (static_cast<long double>(k) * (static_cast<long double>(k) + nu));
    sum += term;
    const long double mag = std::abs(term);
    max_term = std::max(max_term, mag);
    if (k > half && mag <= kEpsL * std::abs(sum)) break;
  }
  if (k == kMaxSeriesTerms) {
    throw PrecisionError("bessel series did not converge",
                         Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())));
  }
  // Rounding in the running sum plus the relative error of the leading gamma factor.
  const long double lead = 1.0L + std::abs(std::log(std::abs(nu) + 1.0L)) * (1.0L + std::abs(nu));
  return {sum, kEpsL * max_term * (8.0L + std::sqrt(static_cast<long double>(k)) + lead)};
}

Estimate hankel_from_series(ComplexL nu, long double x) {
  const Estimate jp = j_series(nu, x);
  const Estimate jm = j_series(-nu, x);
  const ComplexL i(0.0L, 1.0L);
  const ComplexL rot = std::exp(-i * kPiL * nu);
  const ComplexL s = detail::sin_pi(nu);
  const ComplexL value = (jm.value - rot * jp.value) / (i * s);
  const long double error = (jm.error + std::abs(rot) * jp.error) / std::abs(s) +
                            kEpsL * 4.0L * std::abs(value);
  return {value, error};
}

// sqrt(2/(pi x)) e^{i(x - nu pi/2 - pi/4)} sum_k i^k a_k(nu) / x^k, truncated at its smallest term.
Estimate hankel_large_argument(ComplexL nu, long double x) {
  const ComplexL i(0.0L, 1.0L);
  const ComplexL mu = 4.0L * nu * nu;
  const ComplexL prefactor =
      std::sqrt(2.0L / (kPiL * x)) * std::exp(i * (x - nu * kPiL / 2.0L - kPiL / 4.0L));
  ComplexL term = 1.0L;
  ComplexL sum = term;
  long double previous = 1.0L;
  long double omitted = std::numeric_limits<long double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    const ComplexL next = term * (mu - odd * odd) / (8.0L * k) * i / x;
    const long double mag = std::abs(next);
    if (mag > previous) {
      omitted = previous;
      break;
    }
    sum += next;
    term = next;
    previous = mag;
    if (mag <= kEpsL * std::abs(sum)) {
      omitted = mag;
      break;
    }
  }
  const long double scale = std::abs(prefactor);
  return {prefactor * sum, scale * (omitted + 4.0L * kEpsL * std::abs(sum))};
}

// H_{nu} from the large-argument expansion at the orders nu0 = nu - n and nu0 + 1
// (small, so the expansion is good at moderate x) and the upward recurrence
// H_{mu+1} = (2 mu / x) H_mu - H_{mu-1}. Start errors are carried through the
// recurrence by its two linear responses.
Estimate hankel_by_recurrence(ComplexL nu, long double x) {
  const long double n = std::floor(nu.real());
  if (n < 1.0L) return {0.0L, std::numeric_limits<long double>::infinity()};
  const ComplexL nu0 = nu - n;
  const Estimate a = hankel_large_argument(nu0, x);
  const Estimate b = hankel_large_argument(nu0 + 1.0L, x);
  ComplexL h_prev = a.value, h = b.value;
  ComplexL ra_prev = 1.0L, ra = 0.0L, rb_prev = 0.0L, rb = 1.0L;
  long double largest = std::max(std::abs(h_prev), std::abs(h));
  const int steps = static_cast<int>(n) - 1;
  for (int k = 1; k <= steps; ++k) {
    const ComplexL factor = 2.0L * (nu0 + static_cast<long double>(k)) / x;
    const ComplexL h_next = factor * h - h_prev;
    const ComplexL ra_next = factor * ra - ra_prev;
    const ComplexL rb_next = factor * rb - rb_prev;
    h_prev = h;
    h = h_next;
    ra_prev = ra;
    ra = ra_next;
    rb_prev = rb;
    rb = rb_next;
    largest = std::max(largest, std::abs(h));
  }
  const long double growth = std::max(1.0L, std::abs(ra) + std::abs(rb));
  const long double rounding = kEpsL * 4.0L * (steps + 1) * largest * growth;
  return {h, a.error * std::abs(ra) + b.error * std::abs(rb) + rounding};
}

Complex to_double(ComplexL z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

void check_error(const Estimate& est, const HankelOptions& opts, const char* where) {
  const long double magnitude = std::abs(est.value);
  const long double allowed = opts.max_abs_error * std::max(1.0L, magnitude);
  if (!(est.error <= allowed)) {
    throw PrecisionError(std::string(where) + ": estimated error too large", to_double(est.value));
  }
}

}  // namespace

Complex bessel_j(Complex nu, double x, const HankelOptions& opts) {
  check_arguments(nu, x, opts, "bessel_j");
  const Estimate est = j_series(ComplexL(nu.real(), nu.imag()), x);
  check_error(est, opts, "bessel_j");
  return checked(to_double(est.value), "bessel_j");
}

Complex bessel_y(Complex nu, double x, const HankelOptions& opts) {
  check_arguments(nu, x, opts, "bessel_y");
  auto y_series = [x](ComplexL v) {
    const Estimate jp = j_series(v, x);
    const Estimate jm = j_series(-v, x);
    const ComplexL c = std::cos(kPiL * v);
    const ComplexL s = detail::sin_pi(v);
    return Estimate{(jp.value * c - jm.value) / s,
                    (jp.error * std::abs(c) + jm.error) / std::abs(s)};
  };
  const Estimate est = near_integer(nu, opts) ? symmetric_shift(y_series, nu, opts)
                                              : y_series(ComplexL(nu.real(), nu.imag()));
  check_error(est, opts, "bessel_y");
  return checked(to_double(est.value), "bessel_y");
}

Complex hankel1(Complex nu, double x, const HankelOptions& opts) {
  check_arguments(nu, x, opts, "hankel1");
  const ComplexL v(nu.real(), nu.imag());

  Estimate best = hankel_large_argument(v, x);
  if (best.error > kEpsL * 16.0L * std::abs(best.value)) {
    try {
      auto series = [x](ComplexL w) { return hankel_from_series(w, x); };
      const Estimate combined =
          near_integer(nu, opts) ? symmetric_shift(series, nu, opts) : series(v);
      if (combined.error < best.error) best = combined;
    } catch (const PrecisionError&) {
      // keep the asymptotic estimate
    }
  }
  if (best.error > kEpsL * 16.0L * std::abs(best.value)) {
    const Estimate recurred = hankel_by_recurrence(v, x);
    if (recurred.error < best.error) best = recurred;
  }
  check_error(best, opts, "hankel1");
  return checked(to_double(best.value), "hankel1");
}

}  // namespace creepwave::specfun
