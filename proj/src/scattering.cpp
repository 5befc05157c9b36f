// SPDX-License-Identifier: Apache-2.0
#include "creepwave/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace creepwave::scattering {
namespace {

void check_scattering_angle(double theta_s, const char* where) {
  if (!(theta_s > 0.0 && theta_s < kPi)) {
    throw DomainError(std::string(where) + ": scattering angle must lie in (0, pi)");
  }
}

// (lambda - l)(lambda + l + 1) = X + iY with Y = beta (2 alpha + 1)
Complex pole_denominator(int l, ComplexMomentum lambda) {
  const Complex z = lambda.value();
  return (z - static_cast<double>(l)) * (z + static_cast<double>(l) + 1.0);
}

}  // namespace

ComplexMomentum momentum_from_degree(Complex nu0) { return {nu0.real() - 0.5, nu0.imag()}; }

double leaky_amplitude(double theta0, const ObstacleSpec& spec, double tol) {
  spec.validate();
  const double c = std::fabs(std::cos(theta0));
  if (c < tol) throw SingularityError("leaky_amplitude: |cos theta_0| vanishes");
  return std::exp(-spec.leakage * spec.radius * theta0) / std::sqrt(c);
}

SingleTurn single_turn_amplitudes(double theta_s, Complex nu0, Complex c) {
  check_scattering_angle(theta_s, "single_turn_amplitudes");
  const double root_sin = std::sqrt(std::sin(theta_s));
  const Complex plus = c * -kI * std::exp(kI * nu0 * theta_s) / root_sin;
  const Complex minus = -c * std::exp(kI * nu0 * (2.0 * kPi - theta_s)) / root_sin;
  return {checked(plus, "single_turn_amplitudes"), checked(minus, "single_turn_amplitudes")};
}

SingleTurn single_turn_amplitudes(double theta_s, const ObstacleSpec& spec, Complex c) {
  spec.validate();
  return single_turn_amplitudes(theta_s, spec.pole_degree(), c);
}

MultiTurn multi_turn_amplitude(double theta_s, Complex nu0, Complex c, int turns) {
  if (turns < 0) throw DomainError("multi_turn_amplitude: turn cutoff must be >= 0");
  const SingleTurn base = single_turn_amplitudes(theta_s, nu0, c);
  const Complex first = base.plus + base.minus;
  // Each turn adds two caustic crossings, a factor -1, and one circuit e^{2 pi i nu_0}.
  const Complex ratio = -std::exp(2.0 * kPi * kI * nu0);
  Complex term = first, sum = 0.0;
  for (int n = 0; n <= turns; ++n) {
    sum += term;
    term *= ratio;
  }
  const double q = std::abs(ratio);
  const bool convergent = nu0.imag() > 0.0;
  const double tail = convergent ? std::abs(first) * std::pow(q, turns + 1) / (1.0 - q)
                                 : std::numeric_limits<double>::infinity();
  return {checked(sum, "multi_turn_amplitude"), tail, convergent};
}

MultiTurn multi_turn_amplitude(double theta_s, const ObstacleSpec& spec, Complex c, int turns) {
  spec.validate();
  return multi_turn_amplitude(theta_s, spec.pole_degree(), c, turns);
}

Complex resummed_amplitude(double theta_s, Complex nu0, Complex c, double pole_tol) {
  check_scattering_angle(theta_s, "resummed_amplitude");
  const Complex cosine = std::cos(kPi * nu0);
  if (std::abs(cosine) < pole_tol) throw PoleError("resummed_amplitude: cos(pi nu_0) = 0");
  const Complex x = nu0 * (kPi - theta_s) - 0.25 * kPi;
  const Complex bracket = std::exp(-kI * x) + std::exp(kI * x);
  const Complex value =
      -c * std::polar(1.0, 0.25 * kPi) * bracket / (2.0 * cosine * std::sqrt(std::sin(theta_s)));
  return checked(value, "resummed_amplitude");
}

Complex resummed_amplitude(double theta_s, const ObstacleSpec& spec, Complex c) {
  spec.validate();
  return resummed_amplitude(theta_s, spec.pole_degree(), c);
}

Complex multi_mode_amplitude(double theta_s, std::span<const Complex> degrees, Complex c) {
  Complex sum = 0.0;
  for (const Complex& nu : degrees) sum += resummed_amplitude(theta_s, nu, c);
  return sum;
}

Complex turn_series_partial_sum(Complex nu, int turns) {
  if (turns < 0) throw DomainError("turn_series_partial_sum: turn cutoff must be >= 0");
  const Complex ratio = -std::exp(2.0 * kPi * kI * nu);
  Complex term = std::exp(kI * kPi * nu), sum = 0.0;
  for (int n = 0; n <= turns; ++n) {
    sum += term;
    term *= ratio;
  }
  return sum;
}

Complex legendre_prefactor(ComplexMomentum lambda, Complex c) {
  return c * std::polar(1.0, 0.25 * kPi) * (0.5 * std::sqrt(kPi)) *
         std::sqrt(2.0 * lambda.value() + 1.0);
}

Complex legendre_amplitude(double theta_s, ComplexMomentum lambda, Complex g, double theta_min,
                           const specfun::LegendreOptions& opts) {
  if (!(theta_s > 0.0 && theta_s <= kPi)) {
    throw DomainError("legendre_amplitude: scattering angle must lie in (0, pi]");
  }
  if (theta_s < theta_min) {
    throw ValidityError("legendre_amplitude: Legendre form fails in the forward direction");
  }
  const Complex s = std::sin(kPi * lambda.value());
  if (std::abs(s) == 0.0) throw PoleError("legendre_amplitude: sin(pi lambda) = 0");
  const Complex p = specfun::legendre_p(lambda.value(), -std::cos(theta_s), opts);
  return checked(g * p / s, "legendre_amplitude");
}

Complex legendre_amplitude(double theta_s, const ObstacleSpec& spec, Complex c, double theta_min) {
  spec.validate();
  const ComplexMomentum lambda = momentum_from_degree(spec.pole_degree());
  return legendre_amplitude(theta_s, lambda, legendre_prefactor(lambda, c), theta_min);
}

AmplitudeScan scan_amplitude(std::span<const double> theta_s,
                             const std::function<Complex(double)>& amplitude) {
  AmplitudeScan scan;
  scan.theta_s.assign(theta_s.begin(), theta_s.end());
  scan.f.reserve(theta_s.size());
  scan.sigma.reserve(theta_s.size());
  for (double t : theta_s) {
    check_scattering_angle(t, "scan_amplitude");
    const Complex f = amplitude(t);
    scan.f.push_back(f);
    scan.sigma.push_back(std::norm(f));
  }
  return scan;
}

Complex resonance_partial_wave(int l, ComplexMomentum lambda, double energy, double pole_tol) {
  if (l < 0) throw DomainError("resonance_partial_wave: l must be >= 0");
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw DomainError("resonance_partial_wave: energy must be > 0");
  }
  const Complex z = lambda.value();
  if (std::abs(z - static_cast<double>(l)) < pole_tol ||
      std::abs(z + static_cast<double>(l) + 1.0) < pole_tol) {
    throw PoleError("resonance_partial_wave: lambda sits on l or -l-1");
  }
  const double k = std::sqrt(energy);
  const double strength = -(kPi / k) * lambda.beta * (2.0 * lambda.alpha + 1.0);
  return strength / kPi / pole_denominator(l, lambda);
}

double resonance_phase_shift(int l, ComplexMomentum lambda) {
  if (l < 0) throw DomainError("resonance_phase_shift: l must be >= 0");
  const double a = lambda.alpha, b = lambda.beta;
  const double d1 = (l - a) * (l - a) + b * b;
  const double d2 = (l + a + 1.0) * (l + a + 1.0) + b * b;
  const double denom = std::sqrt(d1 * d2);
  if (denom == 0.0) throw PoleError("resonance_phase_shift: lambda sits on a pole");
  double s = b * (2.0 * a + 1.0) / denom;
  if (std::fabs(s) > 1.0 + 1e-12) {
    throw ConsistencyError("resonance_phase_shift: sine of the phase shift exceeds 1");
  }
  // asin(s) = atan2(Im P, |Re P|) with P = (lambda - l)(lambda + l + 1), which keeps
  // its accuracy where s is close to 1.
  const double re = (a - l) * (a + l + 1.0) - b * b;
  return std::atan2(b * (2.0 * a + 1.0), std::fabs(re));
}

double resonance_phase_shift_continuous(int l, ComplexMomentum lambda) {
  if (l < 0) throw DomainError("resonance_phase_shift_continuous: l must be >= 0");
  return kPi - std::arg(pole_denominator(l, lambda));
}

MomentumOfEnergy rotational_trajectory(const eikonal::RotationalLine& line, double beta) {
  if (!(beta >= 0.0)) throw DomainError("rotational_trajectory: beta must be >= 0");
  return [line, beta](double e) {
    return ComplexMomentum{eikonal::alpha_of_energy(line, e), beta};
  };
}

ResonanceScan scan_resonances(const MomentumOfEnergy& lambda_of_e, int l_min, int l_max,
                              std::span<const double> energies, double tol) {
  if (l_min < 0 || l_max < l_min) throw DomainError("scan_resonances: bad l range");
  if (!(tol > 0.0)) throw DomainError("scan_resonances: tolerance must be > 0");
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (!(energies[i] > 0.0)) throw DomainError("scan_resonances: energies must be > 0");
    if (i > 0 && !(energies[i] > energies[i - 1])) {
      throw DomainError("scan_resonances: energy grid must be strictly increasing");
    }
  }

  ResonanceScan out;
  for (int l = l_min; l <= l_max; ++l) {
    auto excess = [&](double e) {
      return resonance_phase_shift_continuous(l, lambda_of_e(e)) - 0.5 * kPi;
    };
    double prev = energies.empty() ? 0.0 : excess(energies[0]);
    for (std::size_t i = 1; i < energies.size(); ++i) {
      const double cur = excess(energies[i]);
      const bool was_above = prev >= 0.0, is_above = cur >= 0.0;
      if (was_above != is_above) {
        double lo = energies[i - 1], hi = energies[i];
        for (int it = 0; it < 200 && hi - lo > tol; ++it) {
          const double mid = 0.5 * (lo + hi);
          if ((excess(mid) >= 0.0) == is_above) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        const double e = 0.5 * (lo + hi);
        const ResonanceEntry entry{l, e, excess(e) + 0.5 * kPi, is_above};
        (is_above ? out.resonances : out.echoes).push_back(entry);
      }
      prev = cur;
    }
  }
  auto by_energy = [](const ResonanceEntry& a, const ResonanceEntry& b) {
    return a.energy < b.energy;
  };
  std::sort(out.resonances.begin(), out.resonances.end(), by_energy);
  std::sort(out.echoes.begin(), out.echoes.end(), by_energy);
  return out;
}

}  // namespace creepwave::scattering
