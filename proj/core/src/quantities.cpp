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

#include "decotrade/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "decotrade/errors.hpp"
#include "decotrade/units.hpp"

namespace decotrade {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void MaterialParams::validate() const {
  require(finite_positive(rho), "material: density must be positive");
  require(finite_positive(c), "material: sound speed must be positive");
  require(std::isfinite(sigma_e) && std::isfinite(sigma_h), "material: deformation potentials must be finite");
}

MaterialParams convert_material(const SiMaterial& si) {
  MaterialParams m{
      .rho = units::kg_per_cubic_meter_to_internal(si.rho_kg_per_m3),
      .c = units::meters_per_second_to_internal(si.sound_speed_m_per_s),
      .sigma_e = units::ev_to_mev(si.sigma_e_ev),
      .sigma_h = units::ev_to_mev(si.sigma_h_ev),
  };
  m.validate();
  return m;
}

SiMaterial to_si(const MaterialParams& m) {
  return {
      .rho_kg_per_m3 = units::internal_to_kg_per_cubic_meter(m.rho),
      .sound_speed_m_per_s = units::internal_to_meters_per_second(m.c),
      .sigma_e_ev = units::mev_to_ev(m.sigma_e),
      .sigma_h_ev = units::mev_to_ev(m.sigma_h),
  };
}

void DotGeometry::validate() const {
  require(finite_positive(l_e) && finite_positive(l_h) && finite_positive(l_z),
          "geometry: all wavefunction widths must be positive");
}

double DotGeometry::min_width() const { return std::min({l_e, l_h, l_z}); }
double DotGeometry::max_width() const { return std::max({l_e, l_h, l_z}); }

std::string_view to_string(EnvelopePath path) {
  switch (path) {
    case EnvelopePath::GaussianAnalytic:
      return "analytic";
    case EnvelopePath::GaussianNumeric:
      return "numeric";
  }
  return "unknown";
}

void PulseSpec::validate() const {
  require(std::isfinite(alpha) && alpha >= 0.0, "pulse: rotation angle must be >= 0");
  require(finite_positive(tau_g), "pulse: gate duration must be positive");
}

double PulseSpec::peak_rabi_frequency() const {
  return alpha / (std::sqrt(2.0 * units::kPi) * tau_g);
}

void MarkovianChannel::validate() const {
  require(finite_positive(tau_r), "markovian: tau_r must be positive");
}

double bose_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) throw DomainError("bose_occupation: omega must be > 0");
  if (!(temperature >= 0.0)) throw DomainError("bose_occupation: temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  const double x = units::quantum_energy(omega) / units::thermal_energy(temperature);
  return 1.0 / std::expm1(x);
}

double omega_bose_occupation(double omega, double temperature) {
  if (!(omega >= 0.0)) throw DomainError("omega_bose_occupation: omega must be >= 0");
  if (!(temperature >= 0.0)) throw DomainError("omega_bose_occupation: temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  const double thermal_rate = units::thermal_energy(temperature) / units::kHbar;
  if (omega == 0.0) return thermal_rate;
  const double x = omega / thermal_rate;
  // x / expm1(x) is well conditioned for small x and underflows cleanly for large x.
  return thermal_rate * (x / std::expm1(x));
}

}  // namespace decotrade
