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

#ifndef DECOTRADE_QUANTITIES_HPP
#define DECOTRADE_QUANTITIES_HPP

#include <string_view>

namespace decotrade {

/// Material constants as they are usually tabulated.
struct SiMaterial {
  double rho_kg_per_m3 = 0.0;
  double sound_speed_m_per_s = 0.0;
  double sigma_e_ev = 0.0;
  double sigma_h_ev = 0.0;

  bool operator==(const SiMaterial&) const = default;
};

/// Deformation-potential material constants in internal units.
///
/// `rho` is in meV ps^2 nm^-5, `c` (longitudinal acoustic sound speed) in nm/ps
/// and the electron/hole deformation potentials in meV. The normalization
/// volume of the phonon modes cancels in the continuum limit and is not stored.
struct MaterialParams {
  double rho = 0.0;
  double c = 0.0;
  double sigma_e = 0.0;
  double sigma_h = 0.0;

  /// Throws InvalidParameter unless rho > 0 and c > 0.
  void validate() const;
  double coupling_contrast() const { return sigma_e - sigma_h; }

  bool operator==(const MaterialParams&) const = default;
};

MaterialParams convert_material(const SiMaterial& si);
SiMaterial to_si(const MaterialParams& m);

/// Gaussian wavefunction widths (nm): in-plane electron, in-plane hole, growth axis.
struct DotGeometry {
  double l_e = 0.0;
  double l_h = 0.0;
  double l_z = 0.0;

  void validate() const;
  double min_width() const;
  double max_width() const;
  DotGeometry scaled(double factor) const { return {l_e * factor, l_h * factor, l_z * factor}; }

  bool operator==(const DotGeometry&) const = default;
};

/// How |F_{+-}(omega)|^2 is obtained for the Gaussian pulse family.
enum class EnvelopePath {
  GaussianAnalytic,  // displaced-Gaussian closed form
  GaussianNumeric,   // direct Fourier sums over the sampled pulse
};

std::string_view to_string(EnvelopePath path);

/// A single-qubit rotation by `alpha` driven by a Gaussian pulse of width `tau_g` (ps).
struct PulseSpec {
  double alpha = 0.0;
  double tau_g = 1.0;
  EnvelopePath envelope = EnvelopePath::GaussianAnalytic;

  void validate() const;
  /// Rabi frequency at the pulse centre, alpha / (sqrt(2 pi) tau_g).
  double peak_rabi_frequency() const;

  bool operator==(const PulseSpec&) const = default;
};

/// Memoryless exponential damping with characteristic time `tau_r` (ps).
struct MarkovianChannel {
  double tau_r = 1.0;

  void validate() const;
  double gamma() const { return 1.0 / tau_r; }

  bool operator==(const MarkovianChannel&) const = default;
};

/// Bose-Einstein occupation 1/(exp(hbar omega / kB T) - 1).
///
/// Exactly zero at T == 0. Throws DomainError for omega <= 0 or T < 0.
double bose_occupation(double omega, double temperature);

/// omega * n_B(omega, T), continuous at omega -> 0 where it tends to kB T / hbar.
///
/// Accepts omega >= 0; used to evaluate R(omega)/omega^2 without dividing by omega.
double omega_bose_occupation(double omega, double temperature);

}  // namespace decotrade

#endif  // DECOTRADE_QUANTITIES_HPP
