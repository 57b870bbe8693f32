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

#ifndef DECOTRADE_TOOLS_RUN_CONFIG_HPP
#define DECOTRADE_TOOLS_RUN_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decotrade/error_tradeoff.hpp"
#include "decotrade/quantities.hpp"
#include "decotrade/reservoir.hpp"

namespace decotrade::cli {

/// Malformed or inconsistent configuration. The message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Named material presets. Values flagged calibrated were obtained by
/// inverting the power-law optimum, not from a materials table.
struct MaterialPreset {
  std::string name;
  SiMaterial material;
  double calibrated_r0 = 0.0;     // ps^2
  double calibrated_tau_r = 0.0;  // ps
};

const MaterialPreset* find_preset(const std::string& name);
const std::vector<MaterialPreset>& presets();

struct MaterialBlock {
  std::string preset;  // empty when explicit values are given
  SiMaterial values;   // kg/m^3, m/s, eV

  bool operator==(const MaterialBlock&) const = default;
};

enum class ReservoirKindName { PowerLaw, Dot };

struct PulseBlock {
  double alpha_over_pi = 0.5;
  EnvelopePath envelope = EnvelopePath::GaussianAnalytic;

  bool operator==(const PulseBlock&) const = default;
};

struct BathBlock {
  std::vector<double> temperatures;
  ReservoirKindName reservoir = ReservoirKindName::PowerLaw;
  std::optional<double> r0;
  NonMarkovianModel nonmarkovian = NonMarkovianModel::Integral;

  bool operator==(const BathBlock&) const = default;
};

struct SweepBlock {
  double tau_min = 0.0;
  double tau_max = 0.0;
  int points = 0;
  bool log_spacing = true;

  bool operator==(const SweepBlock&) const = default;
};

enum class OptimizeMethodName { Analytic, Numeric, Both };

struct OptimizeBlock {
  OptimizeMethodName method = OptimizeMethodName::Both;
  double tau_lo = 0.05;
  double tau_hi = 200.0;

  bool operator==(const OptimizeBlock&) const = default;
};

struct SpectrumBlock {
  double tau_g = 1.0;
  std::optional<double> omega_max;  // default: alpha/(sqrt(2 pi) tau_g) + 6/tau_g
  int points = 401;

  bool operator==(const SpectrumBlock&) const = default;
};

struct RunConfig {
  MaterialBlock material;
  std::optional<DotGeometry> geometry;
  PulseBlock pulse;
  BathBlock bath;
  std::optional<double> tau_r;
  std::optional<SweepBlock> sweep;
  OptimizeBlock optimize;
  std::optional<SpectrumBlock> spectrum;
  std::optional<std::string> output;

  bool operator==(const RunConfig&) const = default;
};

/// Parses the JSON text of a configuration. Unknown keys are rejected.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Canonical JSON; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

/// Physical model assembled from a configuration.
struct ResolvedModel {
  MaterialParams material;
  double alpha = 0.0;
  double r0 = 0.0;
  MarkovianChannel channel;
  ReservoirSpectrum reservoir = ReservoirSpectrum::power_law(0.0);
  bool r0_calibrated = false;
  bool tau_r_calibrated = false;

  TradeoffModel at_temperature(double temperature, const RunConfig& config) const;
};

ResolvedModel resolve(const RunConfig& config);

/// tau_g values of a sweep block, in order.
std::vector<double> sweep_durations(const SweepBlock& sweep);

}  // namespace decotrade::cli

#endif  // DECOTRADE_TOOLS_RUN_CONFIG_HPP
