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

#ifndef DECOTRADE_TOOLS_COMMANDS_HPP
#define DECOTRADE_TOOLS_COMMANDS_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "decotrade/error_tradeoff.hpp"
#include "run_config.hpp"

namespace decotrade::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitNumeric = 3,
  kExitIo = 4,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kSweepHeader = "tau_g_ps,temperature_K,delta_nM,delta_M,delta_total";
inline constexpr const char* kSpectrumHeader = "omega_radps,R_of_omega,S_of_omega";

/// 9 significant digits, '.' decimal point, independent of the global locale.
std::string format_number(double value);

/// Rows ordered by temperature (config order), then tau_g (sweep order).
std::vector<ErrorBudget> compute_sweep(const RunConfig& config);
std::string sweep_csv(const std::vector<ErrorBudget>& rows);

struct OptimizeEntry {
  TradeoffResult result;
  double temperature = 0.0;
};

struct OptimizeReport {
  double alpha = 0.0;
  double r0 = 0.0;
  double tau_r = 0.0;
  bool calibrated = false;
  std::string reservoir;
  std::vector<OptimizeEntry> entries;
};

OptimizeReport compute_optimize(const RunConfig& config);
std::string optimize_text(const OptimizeReport& report);
std::string optimize_record(const OptimizeReport& report);

struct SpectrumRow {
  double omega = 0.0;
  double r = 0.0;
  double s = 0.0;
};

struct SpectrumTable {
  double temperature = 0.0;
  std::vector<SpectrumRow> rows;
};

/// One table per configured temperature on a grid symmetric about omega = 0.
std::vector<SpectrumTable> compute_spectrum(const RunConfig& config);
std::string spectrum_csv(const SpectrumTable& table);

/// Output file for one temperature of a multi-temperature spectrum run:
/// "out.csv" becomes "out_T10K.csv".
std::filesystem::path spectrum_path_for(const std::filesystem::path& base, double temperature);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace decotrade::cli

#endif  // DECOTRADE_TOOLS_COMMANDS_HPP
