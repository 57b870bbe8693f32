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

#include "commands.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "decotrade/gate_spectrum.hpp"
#include "decotrade/units.hpp"

namespace decotrade::cli {

std::string format_number(double value) { return fmt::format("{:.9g}", value); }

std::vector<ErrorBudget> compute_sweep(const RunConfig& config) {
  if (!config.sweep) throw ConfigError("sweep: block required for the sweep command");
  const ResolvedModel resolved = resolve(config);
  const std::vector<double> durations = sweep_durations(*config.sweep);

  std::vector<ErrorBudget> rows;
  rows.reserve(durations.size() * config.bath.temperatures.size());
  for (double temperature : config.bath.temperatures) {
    const auto block = sweep(resolved.at_temperature(temperature, config), durations);
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

std::string sweep_csv(const std::vector<ErrorBudget>& rows) {
  std::string out = kSweepHeader;
  out += '\n';
  for (const auto& b : rows) {
    out += fmt::format("{},{},{},{},{}\n", format_number(b.tau_g), format_number(b.temperature),
                       format_number(b.delta_nm), format_number(b.delta_m), format_number(b.delta_total));
  }
  return out;
}

OptimizeReport compute_optimize(const RunConfig& config) {
  const ResolvedModel resolved = resolve(config);
  OptimizeReport report;
  report.alpha = resolved.alpha;
  report.r0 = resolved.r0;
  report.tau_r = resolved.channel.tau_r;
  report.calibrated = resolved.r0_calibrated || resolved.tau_r_calibrated;
  report.reservoir = config.bath.reservoir == ReservoirKindName::PowerLaw ? "powerlaw" : "dot";

  const auto method = config.optimize.method;
  if (method == OptimizeMethodName::Analytic || method == OptimizeMethodName::Both) {
    report.entries.push_back({analytic_optimum(resolved.alpha, resolved.r0, resolved.channel.tau_r), 0.0});
  }
  if (method == OptimizeMethodName::Numeric || method == OptimizeMethodName::Both) {
    const Bracket bracket{config.optimize.tau_lo, config.optimize.tau_hi};
    for (double temperature : config.bath.temperatures) {
      report.entries.push_back({numeric_optimum(resolved.at_temperature(temperature, config), bracket), temperature});
    }
  }
  return report;
}

std::string optimize_text(const OptimizeReport& report) {
  std::string out;
  out += fmt::format("alpha = {} rad ({} pi), reservoir = {}, R0 = {} ps^2, tau_r = {} ps{}\n",
                     format_number(report.alpha), format_number(report.alpha / units::kPi), report.reservoir,
                     format_number(report.r0), format_number(report.tau_r),
                     report.calibrated ? " (calibrated preset)" : "");
  for (const auto& e : report.entries) {
    const auto& r = e.result;
    out += fmt::format(
        "[{}] T = {} K: tau_opt = {} ps, delta_min = {}, delta_nM = {}, delta_M = {}, delta_M/delta_nM = {}\n",
        to_string(r.method), format_number(e.temperature), format_number(r.tau_opt), format_number(r.delta_min),
        format_number(r.budget.delta_nm), format_number(r.budget.delta_m),
        format_number(r.budget.delta_m / r.budget.delta_nm));
  }
  return out;
}

std::string optimize_record(const OptimizeReport& report) {
  nlohmann::json root;
  root["alpha"] = report.alpha;
  root["R0_ps2"] = report.r0;
  root["tau_r_ps"] = report.tau_r;
  root["calibrated"] = report.calibrated;
  root["reservoir"] = report.reservoir;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    const auto& r = e.result;
    entries.push_back({
        {"method", std::string(to_string(r.method))},
        {"temperature_K", e.temperature},
        {"tau_opt_ps", r.tau_opt},
        {"delta_min", r.delta_min},
        {"delta_nM", r.budget.delta_nm},
        {"delta_M", r.budget.delta_m},
        {"delta_M_over_delta_nM", r.budget.delta_m / r.budget.delta_nm},
    });
  }
  root["results"] = entries;
  return root.dump(2) + "\n";
}

std::vector<SpectrumTable> compute_spectrum(const RunConfig& config) {
  const ResolvedModel resolved = resolve(config);
  const SpectrumBlock block = config.spectrum.value_or(SpectrumBlock{});
  const PulseSpec pulse{resolved.alpha, block.tau_g, config.pulse.envelope};
  const GateSpectrum gate(pulse);
  const double omega_max = block.omega_max.value_or(pulse.peak_rabi_frequency() + 6.0 / block.tau_g);

  // omega_i = omega_max (2i - (n-1)) / (n-1): exactly antisymmetric in i.
  const int n = block.points;
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] =
        omega_max * static_cast<double>(2 * i - (n - 1)) / static_cast<double>(n - 1);
  }
  std::vector<double> s(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) s[i] = gate(grid[i]);

  std::vector<SpectrumTable> tables;
  for (double temperature : config.bath.temperatures) {
    SpectrumTable table{temperature, {}};
    table.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      table.rows.push_back({grid[i], resolved.reservoir.thermal(grid[i], temperature), s[i]});
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

std::string spectrum_csv(const SpectrumTable& table) {
  std::string out = kSpectrumHeader;
  out += '\n';
  for (const auto& row : table.rows) {
    out += fmt::format("{},{},{}\n", format_number(row.omega), format_number(row.r), format_number(row.s));
  }
  return out;
}

std::filesystem::path spectrum_path_for(const std::filesystem::path& base, double temperature) {
  std::filesystem::path out = base;
  out.replace_filename(base.stem().string() + "_T" + format_number(temperature) + "K" + base.extension().string());
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError(path.string() + ": write failed");
}

}  // namespace decotrade::cli
