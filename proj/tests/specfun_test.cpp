// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "creepwave/specfun.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace creepwave;
using creepwave::testing::graded_breaks;
using creepwave::testing::load_records;
using creepwave::testing::rel_err;

namespace {

// Second difference on the offsets that are actually representable around t. The
// combination is formed in long double: in double its own rounding is ~1e-8 at h = 1e-4.
double airy_ode_residual(double t, double h) {
  const double tp = t + h, tm = t - h;
  const long double hp = tp - t, hm = t - tm;
  const long double f0 = specfun::airy_ai(t), fp = specfun::airy_ai(tp), fm = specfun::airy_ai(tm);
  const long double second = 2.0L * (hm * fp - (hp + hm) * f0 + hp * fm) / (hp * hm * (hp + hm));
  return static_cast<double>(std::fabs(second - t * f0));
}

Complex spherical_hankel_closed_form(int n, double x) {
  // h_n(x) = (-i)^{n+1} e^{ix}/x sum_m i^m (n+m)! / (m! (n-m)! (2x)^m); H_{n+1/2} = sqrt(2x/pi) h_n.
  Complex sum = 0.0, im = 1.0;
  for (int m = 0; m <= n; ++m) {
    double c = 1.0;
    for (int j = n - m + 1; j <= n + m; ++j) c *= j;
    for (int j = 2; j <= m; ++j) c /= j;
    sum += im * c / std::pow(2.0 * x, m);
    im *= kI;
  }
  const Complex lead = std::pow(-kI, n + 1) * std::exp(kI * x) / x;
  return std::sqrt(2.0 * x / kPi) * lead * sum;
}

Complex hankel_derivative(Complex nu, double x) {
  return specfun::hankel1(nu - 1.0, x) - nu / x * specfun::hankel1(nu, x);
}

}  // namespace

TEST_SUITE("airy") {
  TEST_CASE("reference values") {
    for (const auto& r : load_records("airy")) {
      const auto a = specfun::airy(r.numbers[0]);
      CAPTURE(r.numbers[0]);
      CHECK(rel_err(a.ai, r.numbers[1]) <= r.tolerance);
      CHECK(rel_err(a.ai_prime, r.numbers[2]) <= r.tolerance);
    }
  }

  TEST_CASE("values at the origin against the rotated cosine integral") {
    // Ai(t) = (1/pi) int_0^inf cos(s^3/3 + t s) ds; at t = 0 the ray s = e^{i pi/6} x
    // turns the oscillation into e^{-x^3/3}.
    const auto& rule = quad::gauss_legendre(64);
    std::vector<double> breaks;
    for (int i = 0; i <= 24; ++i) breaks.push_back(0.5 * i);
    const double i0 = quad::integrate_panels([](double x) { return std::exp(-x * x * x / 3.0); },
                                             breaks, rule);
    const double i1 = quad::integrate_panels(
        [](double x) { return x * std::exp(-x * x * x / 3.0); }, breaks, rule);
    const double ai0 = std::cos(kPi / 6.0) / kPi * i0;
    const double aip0 = -std::sin(kPi / 3.0) / kPi * i1;
    CHECK(std::fabs(specfun::airy_ai(0.0) - ai0) < 1e-9);
    CHECK(std::fabs(specfun::airy_ai_prime(0.0) - aip0) < 1e-9);
    CHECK(specfun::airy_ai(0.0) == doctest::Approx(0.3550280539).epsilon(1e-10));
    CHECK(specfun::airy_ai_prime(0.0) == doctest::Approx(-0.2588194038).epsilon(1e-10));
  }

  TEST_CASE("decay matches the leading asymptotic form") {
    // Ai / leading term = 1 - u1/zeta + u2/zeta^2 - ..., u1 = 5/72, u2 = 385/10368.
    const double u1 = 5.0 / 72.0, u2 = 385.0 / 10368.0;
    for (double t : {5.0, 6.0, 8.0, 10.0, 15.0}) {
      const double zeta = 2.0 / 3.0 * std::pow(t, 1.5);
      const double lead = std::exp(-zeta) / (2.0 * std::sqrt(kPi) * std::pow(t, 0.25));
      const double ratio = specfun::airy_ai(t) / lead;
      CAPTURE(t);
      CHECK(std::fabs(ratio - (1.0 - u1 / zeta)) < 1.2 * u2 / (zeta * zeta));
      if (t >= 8.0) CHECK(std::fabs(ratio - 1.0) < 0.005);
    }
    const auto a8 = specfun::airy(8.0);
    CHECK(std::fabs(a8.ai_prime / a8.ai) == doctest::Approx(std::sqrt(8.0)).epsilon(0.02));
  }

  TEST_CASE("differential equation") {
    for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      CAPTURE(t);
      CHECK(airy_ode_residual(t, 1e-4) < 1e-8);
    }
    for (int i = 0; i <= 200; ++i) {
      const double t = -5.0 + 0.05 * i;
      CAPTURE(t);
      CHECK(airy_ode_residual(t, 1e-4) < 1e-7);
    }
  }

  TEST_CASE("derivative is consistent with the function") {
    const double h = 1e-5;
    const double fd = (specfun::airy_ai(1.0 + h) - specfun::airy_ai(1.0 - h)) / (2.0 * h);
    CHECK(std::fabs(fd - specfun::airy_ai_prime(1.0)) < 1e-7);
  }

  TEST_CASE("continuity across the series and asymptotic switch") {
    // Ai(-9) sits next to a zero, so the jump is measured against the local envelope.
    for (double t : {-9.0, 9.0}) {
      const auto below = specfun::airy(std::nextafter(t, 0.0));
      const auto above = specfun::airy(std::nextafter(t, 2.0 * t));
      const double scale = std::fabs(above.ai) + std::fabs(above.ai_prime) / std::sqrt(std::fabs(t));
      CHECK(std::fabs(below.ai - above.ai) < 1e-13 * scale);
      CHECK(std::fabs(below.ai_prime - above.ai_prime) < 1e-13 * scale * std::sqrt(std::fabs(t)));
    }
  }

  TEST_CASE("far oscillatory region is refused") {
    CHECK_THROWS_AS(specfun::airy(-2e6), RangeError);
    CHECK_THROWS_AS(specfun::airy(std::nan("")), DomainError);
  }
}

TEST_SUITE("hankel") {
  TEST_CASE("reference values") {
    for (const auto& r : load_records("hankel1")) {
      const Complex nu(r.numbers[0], r.numbers[1]);
      const Complex want(r.numbers[3], r.numbers[4]);
      const Complex got = specfun::hankel1(nu, r.numbers[2]);
      CAPTURE(nu);
      CAPTURE(r.numbers[2]);
      CHECK(std::abs(got - want) / std::max(1.0, std::abs(want)) <= r.tolerance);
    }
  }

  TEST_CASE("half-integer orders against the elementary closed form") {
    for (int n = 0; n <= 2; ++n) {
      for (int i = 0; i <= 39; ++i) {
        const double x = 0.5 + 0.5 * i;
        const Complex want = spherical_hankel_closed_form(n, x);
        CAPTURE(n);
        CAPTURE(x);
        CHECK(std::abs(specfun::hankel1(n + 0.5, x) - want) < 1e-10 * std::max(1.0, std::abs(want)));
      }
    }
    const Complex h = specfun::hankel1(0.5, 1.0);
    CHECK(std::abs(h - (-kI * std::sqrt(2.0 / kPi) * std::exp(kI))) < 1e-14);
    CHECK(std::abs(specfun::hankel1(0.5, kPi)) == doctest::Approx(std::sqrt(2.0) / kPi));
  }

  TEST_CASE("Wronskian of J and Y") {
    const Complex nu(0.3, 0.2);
    const double x = 2.0, h = 1e-5;
    const Complex j = specfun::bessel_j(nu, x), y = specfun::bessel_y(nu, x);
    const Complex dj = (specfun::bessel_j(nu, x + h) - specfun::bessel_j(nu, x - h)) / (2.0 * h);
    const Complex dy = (specfun::bessel_y(nu, x + h) - specfun::bessel_y(nu, x - h)) / (2.0 * h);
    CHECK(std::abs(j * dy - y * dj - 2.0 / (kPi * x)) < 1e-6);
  }

  TEST_CASE("argument must be positive") {
    CHECK_THROWS_AS(specfun::hankel1(1.5, 0.0), DomainError);
    CHECK_THROWS_AS(specfun::hankel1(1.5, -2.0), DomainError);
  }

  TEST_CASE("strongly damped orders at large argument are refused rather than guessed") {
    // Series cancellation ~e^x; the expansion at nu - floor(Re nu) still has |4 nu^2| ~ 8x.
    CHECK_THROWS_AS(specfun::hankel1({16.2, 10.0}, 44.5), PrecisionError);
  }
}

TEST_SUITE("hankel roots") {
  TEST_CASE("reference roots") {
    for (const auto& r : load_records("hankel_root")) {
      const double kr = r.numbers[0];
      const int m = static_cast<int>(r.numbers[1]);
      const auto root = specfun::hankel_root(m, kr, 1.0, 1e-12);
      CAPTURE(kr);
      CAPTURE(m);
      CHECK(std::abs(root.degree - Complex(r.numbers[2], r.numbers[3])) < r.tolerance);
      CHECK(root.degree.imag() > 0.0);
      CHECK(root.residual < 1e-12);
      CHECK(root.iterations <= 25);
    }
  }

  TEST_CASE("kR^(1/2) seed formula") {
    const Complex s = specfun::hankel_root_seed(1, 10.0, specfun::RootSeed::KrSqrt);
    CHECK(s.real() == doctest::Approx(12.91).epsilon(1e-3));
    CHECK(s.imag() == doctest::Approx(5.04).epsilon(1e-3));
    // From this seed Newton still converges, but not to the m = 1 root.
    specfun::RootOptions opts;
    opts.seed = specfun::RootSeed::KrSqrt;
    const auto root = specfun::hankel_root(1, 10.0, 1.0, 1e-10, opts);
    CHECK(root.residual < 1e-10);
    CHECK(root.degree.imag() > 0.0);
  }

  TEST_CASE("refined root sits next to its Airy-zero seed") {
    for (double kr : {10.0, 20.0}) {
      for (int m = 1; m <= 3; ++m) {
        const auto root = specfun::hankel_root(m, kr, 1.0, 1e-10);
        CHECK(std::abs(root.degree - root.seed) < 0.5);
      }
    }
  }

  TEST_CASE("imaginary part grows with the root index") {
    const auto r1 = specfun::hankel_root(1, 10.0, 1.0, 1e-10);
    const auto r2 = specfun::hankel_root(2, 10.0, 1.0, 1e-10);
    const auto r3 = specfun::hankel_root(3, 10.0, 1.0, 1e-10);
    CHECK(r2.degree.imag() > r1.degree.imag());
    CHECK(r3.degree.imag() > r2.degree.imag());
  }

  TEST_CASE("small kR and exhausted iterations") {
    CHECK_THROWS_AS(specfun::hankel_root(1, 4.0, 1.0, 1e-10), DomainError);
    specfun::RootOptions opts;
    opts.max_iterations = 1;
    try {
      specfun::hankel_root(1, 10.0, 1.0, 1e-14, opts);
      FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
      CHECK(e.iterations() == 1);
      CHECK(std::abs(e.last_iterate() - Complex(11.9729518759, 3.5087578285)) < 0.1);
    }
  }

  TEST_CASE("radial products of the first two modes decay along the axis") {
    // Both modes vanish at x = kR, so the Bessel-equation identity
    // (mu^2 - nu^2) int f g / x = [x (f g' - f' g)] leaves only the upper end.
    const double kr = 10.0;
    const Complex n1 = specfun::hankel_root(1, kr, 1.0, 1e-13).degree;
    const Complex n2 = specfun::hankel_root(2, kr, 1.0, 1e-13).degree;
    auto truncated = [&](double x) {
      const Complex f = specfun::hankel1(n1, x), g = specfun::hankel1(n2, x);
      const Complex w = f * hankel_derivative(n2, x) - hankel_derivative(n1, x) * g;
      return x * w / (n2 * n2 - n1 * n1);
    };

    // The identity against direct quadrature on a short range.
    const double x_max = 40.0;
    std::vector<double> breaks;
    for (int i = 0; i <= 60; ++i) breaks.push_back(kr + (x_max - kr) * i / 60.0);
    const Complex direct = quad::integrate_panels(
        [&](double x) { return specfun::hankel1(n1, x) * specfun::hankel1(n2, x) / x; }, breaks,
        quad::gauss_legendre(32));
    CHECK(std::abs(direct - truncated(x_max)) < 1e-8 * std::abs(direct));

    double previous = std::abs(truncated(250.0));
    for (double x : {500.0, 1000.0, 2000.0}) {
      const double now = std::abs(truncated(x));
      CAPTURE(x);
      CHECK(now < previous);
      previous = now;
    }
  }
}

TEST_SUITE("legendre") {
  TEST_CASE("reference values") {
    for (const auto& r : load_records("legendre")) {
      const Complex lambda(r.numbers[0], r.numbers[1]);
      const Complex want(r.numbers[3], r.numbers[4]);
      const Complex got = specfun::legendre_p(lambda, r.numbers[2]);
      CAPTURE(lambda);
      CAPTURE(r.numbers[2]);
      CHECK(std::abs(got - want) / std::max(1.0, std::abs(want)) <= r.tolerance);
    }
  }

  TEST_CASE("unit value at z = 1 and integer degree") {
    CHECK(std::abs(specfun::legendre_p({3.7, 0.4}, 1.0) - 1.0) < 1e-15);
    CHECK(std::abs(specfun::legendre_p(2.0, 0.5) - (-0.125)) < 1e-15);
    CHECK(specfun::legendre_polynomial(2, 0.5) == doctest::Approx(-0.125));
    for (int l = 0; l <= 6; ++l) {
      for (double z : {-0.9, -0.3, 0.2, 0.7}) {
        CHECK(std::abs(specfun::legendre_p(static_cast<double>(l), z) -
                       specfun::legendre_polynomial(l, z)) < 1e-13);
      }
    }
  }

  TEST_CASE("Laplace integral at z = 0") {
    // P_lambda(cos t) = (1/pi) int_0^pi (cos t + i sin t cos phi)^lambda dphi; at t = pi/2
    // the base i cos(phi) vanishes at phi = pi/2, so the panels are graded there.
    const Complex lambda(0.5, 1.0);
    auto integrand = [&](double phi) { return std::pow(kI * std::cos(phi), lambda); };
    const auto& rule = quad::gauss_legendre(64);
    const auto left = graded_breaks(0.0, kPi / 2.0, false, 40);
    const auto right = graded_breaks(kPi / 2.0, kPi, true, 40);
    const Complex oracle =
        (quad::integrate_panels(integrand, left, rule) + quad::integrate_panels(integrand, right, rule)) /
        kPi;
    CHECK(std::abs(specfun::legendre_p(lambda, 0.0) - oracle) < 1e-8);
  }

  TEST_CASE("series and integral routes agree where both apply") {
    specfun::LegendreOptions series;
    series.method = specfun::LegendreMethod::Series;
    for (Complex lambda : {Complex(1.3, 0.7), Complex(4.5, 0.2), Complex(0.2, 2.0)}) {
      for (double z : {0.9, 0.3, -0.2}) {
        const Complex a = specfun::legendre_p_series(lambda, z, series).value;
        const Complex b = specfun::legendre_p_integral(lambda, z);
        CAPTURE(lambda);
        CAPTURE(z);
        CHECK(std::abs(a - b) < 1e-11 * std::max(1.0, std::abs(a)));
      }
    }
  }

  TEST_CASE("series near z = -1 fails loudly") {
    specfun::LegendreOptions series;
    series.method = specfun::LegendreMethod::Series;
    try {
      specfun::legendre_p({2.2, 0.3}, -0.999999, series);
      FAIL("expected PrecisionError");
    } catch (const PrecisionError& e) {
      CHECK(is_finite(e.partial()));
    }
    CHECK_THROWS_AS(specfun::legendre_p({2.2, 0.3}, -1.0), DomainError);
    CHECK_THROWS_AS(specfun::legendre_p({2.2, 0.3}, 1.5), DomainError);
  }

  TEST_CASE("projection closed form") {
    CHECK_THROWS_AS(specfun::legendre_projection(2.0, 2), PoleError);
    CHECK_THROWS_AS(specfun::legendre_projection(-3.0, 2), PoleError);
    const Complex p = specfun::legendre_projection(2.5, 1);
    CHECK(p.real() == doctest::Approx(1.0 / (6.75 * kPi)).epsilon(1e-14));
    CHECK(p.real() == doctest::Approx(0.04716).epsilon(1e-4));
  }

  TEST_CASE("projection against quadrature") {
    // P_lambda(-z) is log-singular at z = 1: geometric panels toward that end.
    const Complex lambda(1.3, 0.7);
    const int l = 2;
    const auto breaks = graded_breaks(-1.0, 1.0, false, 40);
    const Complex oracle = 0.5 * quad::integrate_panels(
                                     [&](double z) {
                                       return specfun::legendre_p(lambda, -z) *
                                              specfun::legendre_polynomial(l, z);
                                     },
                                     breaks, quad::gauss_legendre(64));
    CHECK(std::abs(specfun::legendre_projection(lambda, l) - oracle) < 1e-8);
  }
}
