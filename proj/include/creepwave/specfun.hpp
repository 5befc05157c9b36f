// SPDX-License-Identifier: Apache-2.0
//
// Special-function kernel: Airy Ai/Ai', Bessel and Hankel functions of complex
// order at real argument, complex-order Hankel roots, and Legendre functions of
// complex degree on the cut (-1, 1].
//
// All routines are pure; shared Gauss-Legendre tables are the only static data.
#pragma once

#include "creepwave/types.hpp"

namespace creepwave::specfun {

// ---------------------------------------------------------------------------
// Airy
// ---------------------------------------------------------------------------

struct AiryValues {
  double ai;
  double ai_prime;
};

/// Below this |t| the Maclaurin series is summed (in binary128); above it the
/// large-argument expansions are used.
inline constexpr double kAiryMaclaurinLimit = 9.0;

/// Beyond t < -kAiryOscillatoryLimit the oscillatory phase cannot be resolved
/// at double precision and RangeError is thrown.
inline constexpr double kAiryOscillatoryLimit = 1.0e6;

AiryValues airy(double t);
double airy_ai(double t);
double airy_ai_prime(double t);

// ---------------------------------------------------------------------------
// Bessel / Hankel of complex order
// ---------------------------------------------------------------------------

struct HankelOptions {
  /// Orders within integer_epsilon of an integer are evaluated as the mean of the
  /// orders shifted by +-i*integer_shift (exact up to O(integer_shift^2)).
  double integer_epsilon = 1e-6;
  double integer_shift = 1e-5;
  /// Largest |nu| accepted.
  double max_order = 60.0;
  /// PrecisionError is thrown when the estimated error exceeds
  /// max_abs_error * max(1, |result|).
  double max_abs_error = 1e-8;
};

/// J_nu(x), x > 0, by the ascending series.
Complex bessel_j(Complex nu, double x, const HankelOptions& opts = {});

/// Y_nu(x) = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi).
Complex bessel_y(Complex nu, double x, const HankelOptions& opts = {});

/// First-kind Hankel function H^(1)_nu(x), x > 0.
///
/// Uses (J_{-nu} - e^{-i nu pi} J_nu) / (i sin nu pi) for moderate x, the
/// Hankel large-argument expansion for large x, and in between the expansion at
/// the order nu - floor(Re nu) followed by the upward order recurrence; the
/// candidate with the smallest error estimate wins.
Complex hankel1(Complex nu, double x, const HankelOptions& opts = {});

/// How the Newton iteration for a Hankel root is started.
enum class RootSeed {
  /// nu = kR + (1/2)(kR)^{1/3} [3 pi (4m-1)/4]^{2/3} e^{i pi/3}:
  /// lands next to the m-th root.
  AiryZeros,
  /// The same formula with (kR)^{1/2}; converges to a root, not always the m-th.
  KrSqrt,
};

/// Complex degree nu with H^(1)_nu(kR) = 0.
struct HankelRoot {
  int index;
  Complex degree;
  double residual;  // |H^(1)_nu(kR)| at the returned degree
  int iterations;
  Complex seed;
};

Complex hankel_root_seed(int m, double kr, RootSeed rule = RootSeed::AiryZeros);

struct RootOptions {
  RootSeed seed = RootSeed::AiryZeros;
  int max_iterations = 50;
  /// Centered-difference step in nu for dH/dnu.
  double derivative_step = 1e-6;
  HankelOptions hankel{};
};

/// Newton refinement of the m-th root (kR >= 5; m <= 10 is the tested range).
/// Throws ConvergenceError carrying the last iterate.
HankelRoot hankel_root(int m, double k, double radius, double tol, const RootOptions& opts = {});

// ---------------------------------------------------------------------------
// Legendre functions of complex degree
// ---------------------------------------------------------------------------

enum class LegendreMethod {
  Auto,      // series when well conditioned, otherwise the integral route
  Series,    // hypergeometric series only
  Integral,  // Mehler-Dirichlet integral only
};

struct LegendreOptions {
  LegendreMethod method = LegendreMethod::Auto;
  int max_terms = 100000;
  /// Relative stopping tolerance of the series.
  double tolerance = 1e-17;
  /// Auto mode abandons the series when max|term| / |sum| exceeds this.
  double max_condition = 1e4;
  /// Auto mode goes straight to the integral for (1-z)/2 above this.
  double series_reach = 0.75;
};

struct LegendreSeries {
  Complex value;
  int terms;
  double condition;  // max |term| / |sum|
};

/// P_lambda(z) = 2F1(-lambda, lambda+1; 1; (1-z)/2).
/// Throws PrecisionError (partial sum attached) when max_terms is exhausted.
LegendreSeries legendre_p_series(Complex lambda, double z, const LegendreOptions& opts = {});

/// Mehler-Dirichlet quadrature of P_lambda(cos theta), z in (-1, 1].
Complex legendre_p_integral(Complex lambda, double z);

/// P_lambda(z) for z in (-1, 1]; z <= -1 is a DomainError (log singularity).
Complex legendre_p(Complex lambda, double z, const LegendreOptions& opts = {});

/// Legendre polynomial P_l(z) by the three-term recurrence.
double legendre_polynomial(int l, double z);

/// (1/2) int_{-1}^{1} P_lambda(-z) P_l(z) dz in closed form,
/// sin(pi lambda) / (pi (lambda - l)(lambda + l + 1)).
/// Throws PoleError when lambda is within pole_tol of l or -l-1.
Complex legendre_projection(Complex lambda, int l, double pole_tol = 1e-12);

}  // namespace creepwave::specfun
