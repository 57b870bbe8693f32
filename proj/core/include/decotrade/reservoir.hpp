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

#ifndef DECOTRADE_RESERVOIR_HPP
#define DECOTRADE_RESERVOIR_HPP

#include <optional>

#include "decotrade/quantities.hpp"

namespace decotrade {

/// Low-frequency coefficient R0 (ps^2) of the LA-phonon spectral density J = R0 omega^3,
///
///     R0 = (sigma_e - sigma_h)^2 / (16 pi^2 rho hbar c^5).
double r0_coefficient(const MaterialParams& m);

/// Form-factor cutoff G(omega) = J(omega) / (R0 omega^3) of a Gaussian dot.
///
/// Angular average over u = cos(theta) in [0, 1] of the squared coupling
/// contrast [sigma_e F_e(k) - sigma_h F_h(k)]^2 / (sigma_e - sigma_h)^2 with
/// k = omega / c, evaluated with the 64-node Gauss-Legendre rule. G(0) = 1.
/// Throws DomainError for omega < 0 or sigma_e == sigma_h (G is undefined).
double cutoff_function(double omega, const MaterialParams& m, const DotGeometry& g);

/// Zero-temperature density J(omega) and its thermal dressing R(omega, T).
class ReservoirSpectrum {
 public:
  enum class Kind { PowerLaw, QuantumDot };

  /// J(omega) = r0 * omega^3.
  static ReservoirSpectrum power_law(double r0);

  /// J(omega) = R0 omega^3 G(omega) with R0 from the material constants.
  static ReservoirSpectrum quantum_dot(const MaterialParams& m, const DotGeometry& g);

  /// Same cutoff shape with a prescribed low-frequency coefficient.
  static ReservoirSpectrum quantum_dot(const MaterialParams& m, const DotGeometry& g, double r0);

  Kind kind() const { return kind_; }
  double r0() const { return r0_; }
  const std::optional<MaterialParams>& material() const { return material_; }
  const std::optional<DotGeometry>& geometry() const { return geometry_; }

  /// J(omega) in rad/ps for omega >= 0.
  double zero_temperature(double omega) const;

  /// Detailed-balance form R(omega) = (n_B + 1) J(omega) for omega > 0 and
  /// n_B(|omega|) J(|omega|) for omega < 0. R(0) = 0.
  double thermal(double omega, double temperature) const;

  /// R(omega, T) / omega^2, evaluated without forming 1/omega^2. At omega = 0 it
  /// returns the limit R0 kB T / hbar (zero at T = 0).
  double thermal_over_omega_squared(double omega, double temperature) const;

  /// [R(omega) + R(-omega)] / omega^2 for omega >= 0, i.e. emission plus
  /// absorption folded onto the positive axis. One cutoff evaluation.
  double folded_over_omega_squared(double omega, double temperature) const;

  /// Frequency above which J(omega) < 1e-30 R0 omega^3; infinite for PowerLaw.
  double negligible_above() const { return negligible_above_; }

 private:
  ReservoirSpectrum() = default;

  /// J(omega) / (R0 omega^3).
  double shape(double omega) const;

  Kind kind_ = Kind::PowerLaw;
  double r0_ = 0.0;
  std::optional<MaterialParams> material_;
  std::optional<DotGeometry> geometry_;
  double negligible_above_ = 0.0;
};

}  // namespace decotrade

#endif  // DECOTRADE_RESERVOIR_HPP
