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

#include "decotrade/error_tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "decotrade/errors.hpp"
#include "decotrade/golden_section.hpp"
#include "decotrade/quadrature.hpp"
#include "decotrade/units.hpp"

namespace decotrade {

namespace {

constexpr double kWindowTailInTau = 12.0;
constexpr double kRelativeTolerance = 1e-7;
constexpr double kAbsoluteFloor = 1e-16;
constexpr std::size_t kMinPanels = 8;
constexpr std::size_t kMaxPanels = 64;

}  // namespace

std::string_view to_string(OptimizationMethod method) {
  switch (method) {
    case OptimizationMethod::AnalyticPowerLaw:
      return "analytic";
    case OptimizationMethod::NumericScan:
      return "numeric";
  }
  return "unknown";
}

std::string_view to_string(NonMarkovianModel model) {
  switch (model) {
    case NonMarkovianModel::Integral:
      return "integral";
    case NonMarkovianModel::LeadingOrder:
      return "leading-order";
  }
  return "unknown";
}

double overlap_window(const PulseSpec& pulse) {
  return pulse.peak_rabi_frequency() + kWindowTailInTau / pulse.tau_g;
}

double nonmarkovian_error(const GateSpectrum& gate, const ReservoirSpectrum& reservoir, double temperature) {
  if (!(temperature >= 0.0)) throw InvalidParameter("nonmarkovian_error: temperature must be >= 0");
  const PulseSpec& pulse = gate.pulse();
  if (pulse.alpha == 0.0 || reservoir.r0() == 0.0) return 0.0;

  const double upper = std::min(overlap_window(pulse), reservoir.negligible_above());
  if (!(upper > 0.0)) return 0.0;

  // Panels no wider than ~1/tau_g so that neither the displaced peaks of S nor
  // the reservoir cutoff can slip between the initial Kronrod nodes.
  const auto panels = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(upper * pulse.tau_g)), kMinPanels,
                                              kMaxPanels);
  std::vector<double> breakpoints(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) {
    breakpoints[i] = upper * static_cast<double>(i) / static_cast<double>(panels);
  }

  // S is even, so the omega < 0 half folds onto omega > 0 as R(-omega).
  auto integrand = [&](double omega) {
    const double s = gate(omega);
    if (s == 0.0) return 0.0;
    return reservoir.folded_over_omega_squared(omega, temperature) * s;
  };
  const quadrature::AdaptiveOptions options{kRelativeTolerance, kAbsoluteFloor, 4000};
  return quadrature::integrate(integrand, breakpoints, options).value;
}

double nonmarkovian_error(const PulseSpec& pulse, const ReservoirSpectrum& reservoir, double temperature) {
  return nonmarkovian_error(GateSpectrum(pulse), reservoir, temperature);
}

double leading_order_nonmarkovian_error(double alpha, double r0, double tau_g) {
  if (!(tau_g > 0.0)) throw InvalidParameter("leading_order_nonmarkovian_error: tau_g must be positive");
  return alpha * alpha * r0 / (3.0 * tau_g * tau_g);
}

double markovian_error(double tau_g, const MarkovianChannel& channel) {
  if (!(tau_g > 0.0)) throw InvalidParameter("markovian_error: tau_g must be positive");
  channel.validate();
  return tau_g * channel.gamma();
}

ErrorBudget total_error(double tau_g, const TradeoffModel& model) {
  ErrorBudget budget;
  budget.tau_g = tau_g;
  budget.temperature = model.temperature;
  switch (model.model) {
    case NonMarkovianModel::Integral:
      budget.delta_nm = nonmarkovian_error(model.pulse(tau_g), model.reservoir, model.temperature);
      break;
    case NonMarkovianModel::LeadingOrder:
      if (model.temperature != 0.0) {
        throw InvalidParameter("leading-order non-Markovian error is only defined at T = 0");
      }
      model.pulse(tau_g).validate();
      budget.delta_nm = leading_order_nonmarkovian_error(model.alpha, model.reservoir.r0(), tau_g);
      break;
  }
  budget.delta_m = markovian_error(tau_g, model.channel);
  budget.delta_total = budget.delta_nm + budget.delta_m;
  return budget;
}

TradeoffResult analytic_optimum(double alpha, double r0, double tau_r) {
  if (!(alpha > 0.0 && r0 > 0.0 && tau_r > 0.0)) {
    throw InvalidParameter("analytic_optimum: alpha, R0 and tau_r must be positive");
  }
  const double gamma_nm = alpha * alpha * r0 / 3.0;
  const double tau_opt = std::cbrt(2.0 * gamma_nm * tau_r);
  const double delta_min = 1.5 * std::cbrt(2.0 * alpha * alpha * r0 / (3.0 * tau_r * tau_r));

  TradeoffResult result;
  result.method = OptimizationMethod::AnalyticPowerLaw;
  result.tau_opt = tau_opt;
  result.delta_min = delta_min;
  result.budget.tau_g = tau_opt;
  result.budget.temperature = 0.0;
  result.budget.delta_nm = leading_order_nonmarkovian_error(alpha, r0, tau_opt);
  result.budget.delta_m = tau_opt / tau_r;
  result.budget.delta_total = result.budget.delta_nm + result.budget.delta_m;
  return result;
}

TradeoffResult numeric_optimum(const TradeoffModel& model, const Bracket& bracket, double relative_width) {
  if (!(bracket.tau_lo > 0.0 && bracket.tau_hi > bracket.tau_lo)) {
    throw InvalidParameter("numeric_optimum: bracket must satisfy 0 < tau_lo < tau_hi");
  }
  auto objective = [&model](double log_tau) { return total_error(std::exp(log_tau), model).delta_total; };
  const ScalarMinimum best = golden_section_minimize(objective, std::log(bracket.tau_lo), std::log(bracket.tau_hi),
                                                    std::log1p(relative_width));

  TradeoffResult result;
  result.method = OptimizationMethod::NumericScan;
  result.tau_opt = std::exp(best.x);
  result.budget = total_error(result.tau_opt, model);
  result.delta_min = result.budget.delta_total;
  return result;
}

std::vector<ErrorBudget> sweep(const TradeoffModel& model, const std::vector<double>& durations) {
  std::vector<ErrorBudget> out(durations.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(durations.size(), 1));

  // Each worker owns a strided set of slots; there is no shared accumulator.
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < durations.size(); i += workers) out[i] = total_error(durations[i], model);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace decotrade
