// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>
#include <vector>

#include "creepwave/ludwig.hpp"
#include "creepwave/specfun.hpp"
#include "doctest.h"

using namespace creepwave;
using namespace creepwave::ludwig;

namespace {

struct ShadowGrid {
  std::vector<double> r, theta, u, v;
};

ShadowGrid shadow_grid(int n, Orientation orientation) {
  ShadowGrid g;
  for (int i = 0; i < n; ++i) g.r.push_back(0.1 + 0.8 * i / (n - 1));
  for (int j = 0; j < n; ++j) g.theta.push_back(2.0 * kPi * (j + 0.5) / n);
  for (double r : g.r) {
    for (double t : g.theta) {
      const ShadowPoint p = shadow_solution(r, t, orientation);
      g.u.push_back(p.u);
      g.v.push_back(p.v);
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("phase") {
  TEST_CASE("cubic phase and its stationary points") {
    CHECK(phase_function(0.0, 1.0, 1.0) == doctest::Approx(2.0 / 3.0));
    const double v = 4.0, h = 1e-6;
    for (double xi : {2.0, -2.0}) {
      const double slope = (phase_function(0.0, v, xi + h) - phase_function(0.0, v, xi - h)) / (2 * h);
      CHECK(std::fabs(slope) < 1e-8);
    }
    CHECK(phase_function(0.0, 1.0, 1.0) - phase_function(0.0, 1.0, -1.0) ==
          doctest::Approx(4.0 / 3.0));
  }

  TEST_CASE("branch phases") {
    const auto [p0, m0] = branch_phases(0.0, 0.0);
    CHECK(p0 == m0);
    const auto [p1, m1] = branch_phases(1.0, 4.0);
    CHECK(p1.real() == doctest::Approx(1.0 + 16.0 / 3.0));
    CHECK(m1.real() == doctest::Approx(1.0 - 16.0 / 3.0));
    CHECK(p1.imag() == 0.0);
    const auto [p2, m2] = branch_phases(0.0, -1.0);
    CHECK(p2.imag() == doctest::Approx(-2.0 / 3.0));
    CHECK(m2.imag() == doctest::Approx(2.0 / 3.0));
    CHECK(p2 == std::conj(m2));
    // The stationary values of the cubic phase reproduce the real pair.
    const double v = 2.3, s = std::sqrt(v);
    const auto [p3, m3] = branch_phases(0.7, v);
    CHECK(p3.real() == doctest::Approx(phase_function(0.7, v, s)));
    CHECK(m3.real() == doctest::Approx(phase_function(0.7, v, -s)));
  }
}

TEST_SUITE("characteristics") {
  TEST_CASE("regime classification") {
    const auto h = classify_regime(0.5, 2.0, 1e-12);
    CHECK(h.tag == RegimeTag::Hyperbolic);
    CHECK(h.discriminant == doctest::Approx(2.0));
    CHECK(classify_regime(0.0, 1.0, 1e-12).tag == RegimeTag::Parabolic);
    const auto e = classify_regime(-0.5, 2.0, 1e-12);
    CHECK(e.tag == RegimeTag::Elliptic);
    CHECK(e.discriminant == doctest::Approx(-2.0));
    CHECK_THROWS_AS(classify_regime(0.5, 1e-13, 1e-12), DegenerateError);
    CHECK_THROWS_AS(classify_regime(0.5, 2.0, 0.0), DomainError);
    CHECK(std::string(to_string(RegimeTag::Elliptic)) == "elliptic");
  }

  TEST_CASE("slopes solve the characteristic quadratic") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> any(-2.0, 2.0), pos(0.1, 3.0);
    for (int i = 0; i < 200; ++i) {
      const double r = pos(rng), v = pos(rng);
      const double ur = any(rng), ut = any(rng), vr = any(rng), vt = any(rng);
      const auto [mp, mm] = characteristic_slopes(r, ur, ut, v, vr, vt);
      // Roundoff scale: the sum of the magnitudes of the three terms.
      auto scale = [&](double m) {
        return std::fabs((ut * ut - v * vt * vt) / (r * r) * m * m) +
               std::fabs(2.0 * (ur * ut - v * vr * vt) * m) +
               std::fabs(r * r * (ur * ur - v * vr * vr));
      };
      CHECK(std::fabs(characteristic_quadratic(r, ur, ut, v, vr, vt, mp)) < 1e-10 * scale(mp));
      CHECK(std::fabs(characteristic_quadratic(r, ur, ut, v, vr, vt, mm)) < 1e-10 * scale(mm));
    }
    CHECK_THROWS_AS(characteristic_slopes(1.0, 1.0, 1.0, -0.1, 1.0, 1.0), DomainError);
  }

  TEST_CASE("lit-side solution has unit phase gradient") {
    for (double r : {1.01, 1.5, 3.0, 10.0, 50.0, 80.0, 200.0}) {
      const double v = lit_v(r);
      const double phase_r = std::sqrt(v) * lit_v_r(r);  // d/dr (2/3) v^{3/2}
      const double grad2 = phase_r * phase_r + 1.0 / (r * r);
      CAPTURE(r);
      CHECK(std::fabs(grad2 - 1.0) < 1e-10);
    }
    for (double r : {50.0, 100.0, 400.0}) {
      CHECK(2.0 / 3.0 * std::pow(lit_v(r), 1.5) / r == doctest::Approx(1.0).epsilon(0.05));
    }
    CHECK(lit_v(1.0) == 0.0);
    CHECK(lit_v_r(1.0) == doctest::Approx(std::cbrt(2.0)));
    CHECK(lit_v_r(1.0 + 1e-9) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-6));
  }
}

TEST_SUITE("uniform field") {
  TEST_CASE("caustic value") {
    for (double k : {1.0, 8.0, 100.0}) {
      const Complex psi = cful_field(0.3, 0.0, k);
      CHECK(std::abs(psi) == doctest::Approx(0.3550280538878172 / std::cbrt(k)).epsilon(1e-14));
    }
    // The A1 term enters through Ai'(0).
    const double k = 8.0;
    const Complex psi = cful_field(0.0, 0.0, k, 0.0, 1.0);
    CHECK(std::abs(psi) == doctest::Approx(0.2588194037928068 / std::cbrt(k * k)).epsilon(1e-14));
  }

  TEST_CASE("lit side follows the two-ray form") {
    const double k = 200.0;
    for (int i = 0; i <= 150; ++i) {
      const double v = 0.5 + 1.5 * i / 150.0;
      const double u = 0.1 * i;
      const Complex full = cful_field(u, v, k);
      const Complex rays = cful_eikonal_limit(u, v, k);
      CAPTURE(v);
      CHECK(std::abs(full - rays) <= 0.02 * cful_envelope(v, k));
      CHECK(std::abs(full) <= 1.02 * cful_envelope(v, k));
    }
  }

  TEST_CASE("shadow side decays like the Airy tail") {
    const double k = 100.0;
    for (double v : {-0.3, -0.5, -1.0}) {
      const double x = std::cbrt(k * k) * -v;
      const double tail = std::exp(-2.0 / 3.0 * std::pow(x, 1.5)) /
                          (2.0 * std::sqrt(kPi) * std::pow(x, 0.25) * std::cbrt(k));
      CAPTURE(v);
      CHECK(std::abs(cful_field(0.0, v, k)) == doctest::Approx(tail).epsilon(0.01));
    }
  }

  TEST_CASE("field samples") {
    const FieldSample lit = field_sample(0.5, 0.2, 10.0, 1.0, 0.5);
    CHECK(lit.psi == cful_field(0.5, 0.2, 10.0, 1.0, 0.5));
    const FieldSample dark = field_sample(0.5, -0.2, 10.0, 1.0, 0.5);
    CHECK(dark.psi == cful_field(0.5, -0.2, 10.0, 1.0, 0.0));
    CHECK(dark.phi_plus.imag() < 0.0);
  }
}

TEST_SUITE("shadow") {
  TEST_CASE("closed-form normal coordinate") {
    CHECK(shadow_v(1.0 - 1e-12) < 0.0);
    CHECK(shadow_v(1.0 - 1e-12) > -1e-6);
    const double y = std::sqrt(0.75);
    const double rhs = y - 0.5 * std::log((1.0 + y) / (1.0 - y));
    CHECK(-2.0 / 3.0 * std::pow(-shadow_v(0.5), 1.5) == doctest::Approx(rhs).epsilon(1e-14));

    double prev = shadow_v(0.01);
    for (int i = 2; i < 100; ++i) {
      const double v = shadow_v(0.01 * i);
      CHECK(v > prev);
      CHECK(v < 0.0);
      prev = v;
    }
    CHECK_THROWS_AS(shadow_v(1.0), DomainError);
    CHECK_THROWS_AS(shadow_v(0.0), DomainError);
  }

  TEST_CASE("eikonal residual") {
    for (int i = 0; i <= 90; ++i) {
      const double r = 0.05 + 0.01 * i;
      const double h = 1e-5 * r;
      const double v = shadow_v(r);
      const double v_r = (shadow_v(r + h) - shadow_v(r - h)) / (2.0 * h);
      CAPTURE(r);
      CHECK(std::fabs((1.0 / (r * r) - 1.0) - (-v) * v_r * v_r) < 1e-6);
      CHECK(v_r == doctest::Approx(shadow_v_r(r)).epsilon(1e-7));
    }
  }

  TEST_CASE("evanescent factor") {
    for (double k : {1.0, 5.0, 10.0, 50.0}) {
      CHECK(evanescent_factor(0.0, k) == 1.0);
      double prev = 1.0;
      for (int i = 1; i < 1000; ++i) {
        const double f = evanescent_factor(i / 1000.0, k);
        CHECK(f < prev);
        prev = f;
      }
      CHECK(evanescent_factor(1.0 - 1e-12, k) < 1e-3);
    }
    CHECK(evanescent_factor(0.5, 10.0) ==
          doctest::Approx(std::pow(1.0 / 3.0, 5.0) * std::exp(5.0)).epsilon(1e-14));
    CHECK(evanescent_factor(0.5, 10.0) == doctest::Approx(0.6105).epsilon(1e-3));
    CHECK(evanescent_factor(1e-4, 10.0) < 1.0);
    CHECK_THROWS_AS(evanescent_factor(1.0, 10.0), DomainError);
  }

  TEST_CASE("shadow field") {
    for (double k : {1.0, 10.0, 50.0}) {
      for (auto mapping : {ShadowMapping::Interior, ShadowMapping::Exterior}) {
        CHECK(std::abs(shadow_field(1.0, 0.3, k, mapping)) ==
              doctest::Approx(1.0 / std::sqrt(k)).epsilon(1e-15));
      }
    }
    CHECK(std::abs(shadow_field(1e6, 0.0, 10.0, ShadowMapping::Exterior)) < 1e-20);
    CHECK(std::abs(shadow_field(1e-8, 0.0, 10.0, ShadowMapping::Interior)) < 1e-20);
    // Deeper into the shadow on either side the field only weakens.
    double prev = std::abs(shadow_field(1.0, 0.0, 10.0, ShadowMapping::Exterior));
    for (int i = 1; i <= 100; ++i) {
      const double a = std::abs(shadow_field(1.0 + 0.05 * i, 0.0, 10.0, ShadowMapping::Exterior));
      CHECK(a < prev);
      prev = a;
    }
    const Complex p = shadow_field(0.6, 0.4, 10.0, ShadowMapping::Interior);
    CHECK(std::arg(p) == doctest::Approx(std::remainder(4.0, 2.0 * kPi)));
    CHECK_THROWS_AS(shadow_field(1.5, 0.0, 10.0, ShadowMapping::Interior), DomainError);
    CHECK_THROWS_AS(shadow_field(0.5, 0.0, 10.0, ShadowMapping::Exterior), DomainError);
  }

  TEST_CASE("generalized Cauchy-Riemann system") {
    const ShadowGrid g = shadow_grid(100, Orientation::Clockwise);
    const CrCheck clean = check_generalized_cr(g.r, g.theta, g.u, g.v);
    CHECK(clean.max_residual < 1e-5);
    CHECK(clean.min_rho > 0.0);

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> noise(-0.01, 0.01);
    std::vector<double> corrupted = g.v;
    for (double& v : corrupted) v *= 1.0 + noise(rng);
    const CrCheck dirty = check_generalized_cr(g.r, g.theta, g.u, corrupted);
    CHECK(dirty.max_residual >= 10.0 * clean.max_residual);

    // Exterior image of the same shadow, counter-clockwise.
    ShadowGrid e;
    for (int i = 0; i < 60; ++i) e.r.push_back(1.2 + 5.0 * i / 59.0);
    for (int j = 0; j < 60; ++j) e.theta.push_back(0.1 + 6.0 * j / 59.0);
    for (double r : e.r) {
      for (double t : e.theta) {
        const ShadowPoint p =
            shadow_solution(r, t, Orientation::CounterClockwise, ShadowMapping::Exterior);
        e.u.push_back(p.u);
        e.v.push_back(p.v);
      }
    }
    CHECK(check_generalized_cr(e.r, e.theta, e.u, e.v).max_residual < 1e-5);

    std::vector<double> lit(g.v.size(), 0.5);
    CHECK_THROWS_AS(check_generalized_cr(g.r, g.theta, g.u, lit), DomainError);
  }
}
