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

#ifndef DECOTRADE_UNITS_HPP
#define DECOTRADE_UNITS_HPP

// Internal unit system. Everything inside the library is expressed in
//
//   time               ps
//   angular frequency  rad/ps
//   energy             meV
//   length             nm
//   temperature        K
//   mass               meV ps^2 / nm^2   (derived, so that E = m v^2 holds)
//
// Material data enters in SI-ish units (kg/m^3, m/s, eV) and is converted once.

namespace decotrade::units {

inline constexpr double kPi = 3.14159265358979323846;

/// Reduced Planck constant, meV ps.
inline constexpr double kHbar = 0.658212;
/// Boltzmann constant, meV / K.
inline constexpr double kBoltzmann = 0.0861733;

/// Exact SI value of one electronvolt in joules.
inline constexpr double kJoulePerEv = 1.602176634e-19;

inline constexpr double kMevPerEv = 1.0e3;
/// 1 m/s = 1e9 nm / 1e12 ps.
inline constexpr double kNmPerPsPerMeterPerSecond = 1.0e-3;
/// One internal mass unit (meV ps^2 / nm^2) in kg: 1e-3 eV * 1e-24 s^2 / 1e-18 m^2.
inline constexpr double kKgPerMassUnit = kJoulePerEv * 1.0e-3 * 1.0e-24 / 1.0e-18;
/// 1 kg/m^3 expressed in mass units per nm^3.
inline constexpr double kDensityPerKgPerCubicMeter = 1.0e-27 / kKgPerMassUnit;

constexpr double ev_to_mev(double ev) { return ev * kMevPerEv; }
constexpr double mev_to_ev(double mev) { return mev / kMevPerEv; }

constexpr double meters_per_second_to_internal(double v) { return v * kNmPerPsPerMeterPerSecond; }
constexpr double internal_to_meters_per_second(double v) { return v / kNmPerPsPerMeterPerSecond; }

constexpr double kg_per_cubic_meter_to_internal(double rho) { return rho * kDensityPerKgPerCubicMeter; }
constexpr double internal_to_kg_per_cubic_meter(double rho) { return rho / kDensityPerKgPerCubicMeter; }

/// Energy quantum hbar*omega in meV for omega in rad/ps.
constexpr double quantum_energy(double omega) { return kHbar * omega; }
/// Thermal energy kB*T in meV.
constexpr double thermal_energy(double temperature) { return kBoltzmann * temperature; }

}  // namespace decotrade::units

#endif  // DECOTRADE_UNITS_HPP
