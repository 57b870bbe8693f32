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

#ifndef DECOTRADE_GATE_SPECTRUM_HPP
#define DECOTRADE_GATE_SPECTRUM_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "decotrade/quantities.hpp"

namespace decotrade {

/// Gaussian driving envelope eps(t) = alpha / (sqrt(2 pi) tau_g) exp(-t^2 / (2 tau_g^2)), rad/ps.
double envelope(double t, const PulseSpec& pulse);

/// phi(t) = integral of eps from -inf to t = (alpha / 2) (1 + erf(t / (sqrt(2) tau_g))).
double accumulated_phase(double t, const PulseSpec& pulse);

struct SpectralAmplitudes {
  std::complex<double> plus;
  std::complex<double> minus;
};

struct SpectralPowers {
  double plus = 0.0;
  double minus = 0.0;
};

/// Displaced-Gaussian closed form |F_{+-}|^2 = alpha^2 exp(-tau_g^2 (omega +- alpha/(sqrt(2 pi) tau_g))^2).
SpectralPowers f_squared_gaussian_approx(double omega, const PulseSpec& pulse);

/// Spectral profile S(omega) = (|F_-|^2 + |F_+|^2) / 3 of a pulse, averaged over input states.
///
/// For EnvelopePath::GaussianNumeric the pulse is sampled once on a uniform
/// grid t in [-8 tau_g, 8 tau_g] (4096 points) and
///
///     F_{+-}(omega) = +- integral du exp(+- i phi(u)) eps(u) exp(i omega u)
///
/// is evaluated by trapezoid sums at arbitrary omega. The analytic path never
/// touches the grid.
class GateSpectrum {
 public:
  static constexpr std::size_t kGridPoints = 4096;
  static constexpr double kHalfWidthInTau = 8.0;

  explicit GateSpectrum(const PulseSpec& pulse);

  const PulseSpec& pulse() const { return pulse_; }

  /// F_{+-}(omega) from the sampled pulse, regardless of the configured path.
  SpectralAmplitudes amplitudes(double omega) const;

  /// |F_{+-}(omega)|^2 using the configured path.
  SpectralPowers powers(double omega) const;

  /// S(omega) using the configured path.
  double operator()(double omega) const;

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& phases() const { return phases_; }

 private:
  void build_grid();

  PulseSpec pulse_;
  std::vector<double> times_;
  std::vector<double> phases_;
  // Trapezoid weight times eps(t_j), and exp(i phi(t_j)).
  std::vector<double> weighted_envelope_;
  std::vector<std::complex<double>> phase_factors_;
};

/// S(omega) for a single evaluation; builds a GateSpectrum internally.
double gate_spectral_function(double omega, const PulseSpec& pulse);

}  // namespace decotrade

#endif  // DECOTRADE_GATE_SPECTRUM_HPP
