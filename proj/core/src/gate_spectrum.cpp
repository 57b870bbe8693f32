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

#include "decotrade/gate_spectrum.hpp"

#include <cmath>

#include "decotrade/errors.hpp"
#include "decotrade/units.hpp"

namespace decotrade {

namespace {

constexpr double kSupportTolerance = 1e-9;

}  // namespace

double envelope(double t, const PulseSpec& pulse) {
  const double x = t / pulse.tau_g;
  return pulse.alpha / (std::sqrt(2.0 * units::kPi) * pulse.tau_g) * std::exp(-0.5 * x * x);
}

double accumulated_phase(double t, const PulseSpec& pulse) {
  return 0.5 * pulse.alpha * (1.0 + std::erf(t / (std::sqrt(2.0) * pulse.tau_g)));
}

SpectralPowers f_squared_gaussian_approx(double omega, const PulseSpec& pulse) {
  const double shift = pulse.peak_rabi_frequency();
  const double a2 = pulse.alpha * pulse.alpha;
  const double tp = pulse.tau_g * (omega + shift);
  const double tm = pulse.tau_g * (omega - shift);
  return {a2 * std::exp(-tp * tp), a2 * std::exp(-tm * tm)};
}

GateSpectrum::GateSpectrum(const PulseSpec& pulse) : pulse_(pulse) {
  pulse_.validate();
  if (pulse_.envelope == EnvelopePath::GaussianNumeric) build_grid();
}

void GateSpectrum::build_grid() {
  const double half_width = kHalfWidthInTau * pulse_.tau_g;
  const double step = 2.0 * half_width / static_cast<double>(kGridPoints - 1);

  times_.resize(kGridPoints);
  phases_.resize(kGridPoints);
  weighted_envelope_.resize(kGridPoints);
  phase_factors_.resize(kGridPoints);
  for (std::size_t j = 0; j < kGridPoints; ++j) {
    const double t = -half_width + step * static_cast<double>(j);
    const double trapezoid = (j == 0 || j + 1 == kGridPoints) ? 0.5 * step : step;
    times_[j] = t;
    phases_[j] = accumulated_phase(t, pulse_);
    weighted_envelope_[j] = trapezoid * envelope(t, pulse_);
    phase_factors_[j] = std::polar(1.0, phases_[j]);
  }

  const double alpha = pulse_.alpha;
  if (alpha > 0.0 && (phases_.front() >= kSupportTolerance * alpha ||
                      std::abs(phases_.back() - alpha) >= kSupportTolerance * alpha)) {
    throw GridSupportError("gate spectrum: pulse area not captured by the time grid");
  }
}

SpectralAmplitudes GateSpectrum::amplitudes(double omega) const {
  if (times_.empty()) {
    // Analytic configuration: sample lazily on a private copy.
    PulseSpec numeric = pulse_;
    numeric.envelope = EnvelopePath::GaussianNumeric;
    return GateSpectrum(numeric).amplitudes(omega);
  }
  std::complex<double> plus{0.0, 0.0};
  std::complex<double> minus{0.0, 0.0};
  for (std::size_t j = 0; j < times_.size(); ++j) {
    const std::complex<double> carrier = std::polar(weighted_envelope_[j], omega * times_[j]);
    plus += phase_factors_[j] * carrier;
    minus += std::conj(phase_factors_[j]) * carrier;
  }
  return {plus, -minus};
}

SpectralPowers GateSpectrum::powers(double omega) const {
  if (pulse_.envelope == EnvelopePath::GaussianAnalytic) return f_squared_gaussian_approx(omega, pulse_);
  const SpectralAmplitudes f = amplitudes(omega);
  return {std::norm(f.plus), std::norm(f.minus)};
}

double GateSpectrum::operator()(double omega) const {
  const SpectralPowers p = powers(omega);
  return (p.minus + p.plus) / 3.0;
}

double gate_spectral_function(double omega, const PulseSpec& pulse) { return GateSpectrum(pulse)(omega); }

}  // namespace decotrade
