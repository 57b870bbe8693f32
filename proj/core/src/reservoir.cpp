// Copyright 2026 The decotrade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "decotrade/reservoir.hpp"

#include <cmath>
#include <limits>

#include "decotrade/errors.hpp"
#include "decotrade/quadrature.hpp"
#include "decotrade/units.hpp"

namespace decotrade {

namespace {

// exp(-x) < 1e-30 for x above this.
constexpr double kNegligibleExponent = 69.0775527898214;

double form_factor_exponent(double k2, double u2, double l_plane, double l_z) {
  return -0.25 * k2 * ((1.0 - u2) * l_plane * l_plane + u2 * l_z * l_z);
}

}  // namespace

double r0_coefficient(const MaterialParams& m) {
  m.validate();
  const double contrast = m.coupling_contrast();
  const double c5 = std::pow(m.c, 5);
  return contrast * contrast / (16.0 * units::kPi * units::kPi * m.rho * units::kHbar * c5);
}

double cutoff_function(double omega, const MaterialParams& m, const DotGeometry& g) {
  if (!(omega >= 0.0)) throw DomainError("cutoff_function: omega must be >= 0");
  const double contrast = m.coupling_contrast();
  if (contrast == 0.0) throw DomainError("cutoff_function: undefined for sigma_e == sigma_h");
  if (omega == 0.0) return 1.0;

  const double k = omega / m.c;
  const double k2 = k * k;
  const auto& rule = quadrature::gauss_legendre_64_unit();
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u2 = rule.nodes[i] * rule.nodes[i];
    const double fe = std::exp(form_factor_exponent(k2, u2, g.l_e, g.l_z));
    const double fh = std::exp(form_factor_exponent(k2, u2, g.l_h, g.l_z));
    const double coupling = m.sigma_e * fe - m.sigma_h * fh;
    sum += rule.weights[i] * coupling * coupling;
  }
  return sum / (contrast * contrast);
}

ReservoirSpectrum ReservoirSpectrum::power_law(double r0) {
  if (!(std::isfinite(r0) && r0 >= 0.0)) throw InvalidParameter("power law: R0 must be >= 0");
  ReservoirSpectrum s;
  s.kind_ = Kind::PowerLaw;
  s.r0_ = r0;
  s.negligible_above_ = std::numeric_limits<double>::infinity();
  return s;
}

ReservoirSpectrum ReservoirSpectrum::quantum_dot(const MaterialParams& m, const DotGeometry& g) {
  return quantum_dot(m, g, r0_coefficient(m));
}

ReservoirSpectrum ReservoirSpectrum::quantum_dot(const MaterialParams& m, const DotGeometry& g, double r0) {
  m.validate();
  g.validate();
  if (!(std::isfinite(r0) && r0 >= 0.0)) throw InvalidParameter("quantum dot: R0 must be >= 0");
  const double contrast = m.coupling_contrast();
  if (contrast == 0.0 && r0 != 0.0) {
    throw InvalidParameter("quantum dot: nonzero R0 with sigma_e == sigma_h has no cutoff shape");
  }

  ReservoirSpectrum s;
  s.kind_ = Kind::QuantumDot;
  s.r0_ = r0;
  s.material_ = m;
  s.geometry_ = g;
  if (contrast == 0.0) {
    s.negligible_above_ = 0.0;
  } else {
    // G(omega) <= ((|sigma_e| + |sigma_h|) / |contrast|)^2 exp(-omega^2 l_min^2 / (2 c^2)).
    const double prefactor = (std::abs(m.sigma_e) + std::abs(m.sigma_h)) / std::abs(contrast);
    const double exponent = 2.0 * std::log(prefactor) + kNegligibleExponent;
    s.negligible_above_ = m.c / g.min_width() * std::sqrt(2.0 * exponent);
  }
  return s;
}

double ReservoirSpectrum::shape(double omega) const {
  if (kind_ == Kind::PowerLaw) return 1.0;
  return cutoff_function(omega, *material_, *geometry_);
}

double ReservoirSpectrum::zero_temperature(double omega) const {
  if (!(omega >= 0.0)) throw DomainError("zero_temperature: omega must be >= 0");
  if (r0_ == 0.0 || omega == 0.0) return 0.0;
  return r0_ * omega * omega * omega * shape(omega);
}

double ReservoirSpectrum::thermal(double omega, double temperature) const {
  if (!(temperature >= 0.0)) throw DomainError("thermal: temperature must be >= 0");
  if (omega == 0.0) return 0.0;
  const double magnitude = std::abs(omega);
  const double j = zero_temperature(magnitude);
  const double occupation = bose_occupation(magnitude, temperature);
  return omega > 0.0 ? (occupation + 1.0) * j : occupation * j;
}

double ReservoirSpectrum::thermal_over_omega_squared(double omega, double temperature) const {
  if (!(temperature >= 0.0)) throw DomainError("thermal: temperature must be >= 0");
  if (r0_ == 0.0) return 0.0;
  const double magnitude = std::abs(omega);
  // R / omega^2 = R0 G(|omega|) * (|omega| n_B + |omega| [omega > 0]).
  double weight = omega_bose_occupation(magnitude, temperature);
  if (omega > 0.0) weight += magnitude;
  if (weight == 0.0) return 0.0;
  return r0_ * shape(magnitude) * weight;
}

double ReservoirSpectrum::folded_over_omega_squared(double omega, double temperature) const {
  if (!(omega >= 0.0)) throw DomainError("folded_over_omega_squared: omega must be >= 0");
  if (!(temperature >= 0.0)) throw DomainError("thermal: temperature must be >= 0");
  if (r0_ == 0.0) return 0.0;
  // omega (n_B + 1) + omega n_B.
  const double weight = omega + 2.0 * omega_bose_occupation(omega, temperature);
  if (weight == 0.0) return 0.0;
  return r0_ * shape(omega) * weight;
}

}  // namespace decotrade
