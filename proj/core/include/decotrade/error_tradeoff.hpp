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

#ifndef DECOTRADE_ERROR_TRADEOFF_HPP
#define DECOTRADE_ERROR_TRADEOFF_HPP

#include <string_view>
#include <vector>

#include "decotrade/gate_spectrum.hpp"
#include "decotrade/quantities.hpp"
#include "decotrade/reservoir.hpp"

namespace decotrade {

/// Error contributions of one gate of duration `tau_g` at temperature `temperature`.
struct ErrorBudget {
  double delta_nm = 0.0;
  double delta_m = 0.0;
  double delta_total = 0.0;
  double tau_g = 0.0;
  double temperature = 0.0;
};

enum class OptimizationMethod { AnalyticPowerLaw, NumericScan };

std::string_view to_string(OptimizationMethod method);

struct TradeoffResult {
  double tau_opt = 0.0;
  double delta_min = 0.0;
  ErrorBudget budget;
  OptimizationMethod method = OptimizationMethod::AnalyticPowerLaw;
};

/// How the phonon-dressing error is evaluated.
enum class NonMarkovianModel {
  Integral,      // full overlap integral of R(omega)/omega^2 and S(omega)
  LeadingOrder,  // alpha^2 R0 / (3 tau_g^2), the small-angle T = 0 power-law law
};

std::string_view to_string(NonMarkovianModel model);

/// Everything except the gate duration: the family of gates being optimized.
struct TradeoffModel {
  double alpha = 0.0;
  EnvelopePath envelope = EnvelopePath::GaussianAnalytic;
  ReservoirSpectrum reservoir = ReservoirSpectrum::power_law(0.0);
  double temperature = 0.0;
  MarkovianChannel channel;
  NonMarkovianModel model = NonMarkovianModel::Integral;

  PulseSpec pulse(double tau_g) const { return {alpha, tau_g, envelope}; }
};

/// Upper end of the frequency window used for the overlap integral:
/// alpha / (sqrt(2 pi) tau_g) + 12 / tau_g.
double overlap_window(const PulseSpec& pulse);

/// delta_nM = integral d omega R(omega, T) S(omega) / omega^2.
///
/// Adaptive Gauss-Kronrod over [0, W] using the evenness of S to fold the
/// negative-frequency (absorption) branch onto the positive axis; W is the
/// overlap window, clipped where the reservoir is negligible. Relative
/// tolerance 1e-7. Throws QuadratureError when that is not reached.
double nonmarkovian_error(const GateSpectrum& gate, const ReservoirSpectrum& reservoir, double temperature);
double nonmarkovian_error(const PulseSpec& pulse, const ReservoirSpectrum& reservoir, double temperature);

/// gamma_nM / tau_g^2 with gamma_nM = alpha^2 R0 / 3.
double leading_order_nonmarkovian_error(double alpha, double r0, double tau_g);

/// delta_M = tau_g / tau_r.
double markovian_error(double tau_g, const MarkovianChannel& channel);

ErrorBudget total_error(double tau_g, const TradeoffModel& model);

/// Closed-form optimum of gamma_nM / tau^2 + tau / tau_r:
///   tau_opt = (2 alpha^2 R0 tau_r / 3)^(1/3), delta_min = (3/2) (2 alpha^2 R0 / (3 tau_r^2))^(1/3).
TradeoffResult analytic_optimum(double alpha, double r0, double tau_r);

struct Bracket {
  double tau_lo = 0.05;
  double tau_hi = 200.0;
};

/// Golden-section minimization of total_error over log(tau_g) inside `bracket`,
/// to relative width `relative_width` in tau_g. Throws NoInteriorMinimum when
/// the minimum is not inside the bracket (e.g. gamma_M = 0).
TradeoffResult numeric_optimum(const TradeoffModel& model, const Bracket& bracket, double relative_width = 1e-4);

/// Budgets at each `tau_g` in order. Points are independent; the result does
/// not depend on evaluation order.
std::vector<ErrorBudget> sweep(const TradeoffModel& model, const std::vector<double>& durations);

}  // namespace decotrade

#endif  // DECOTRADE_ERROR_TRADEOFF_HPP
