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

#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "decotrade/errors.hpp"
#include "decotrade/units.hpp"

namespace decotrade::cli {

using nlohmann::json;

const std::vector<MaterialPreset>& presets() {
  // GaAs density and LA sound speed; deformation potentials chosen with the
  // 9.5 eV contrast used for the calibration. R0 and tau_r invert the
  // power-law optimum tau = alpha^(2/3) 1.47 ps, delta = alpha^(2/3) 0.0035.
  static const std::vector<MaterialPreset> table{
      {"gaas-calibrated", SiMaterial{5370.0, 5110.0, -14.6, -5.1}, 0.00756, 630.0},
  };
  return table;
}

const MaterialPreset* find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

/// Reads the keys of one JSON object and rejects the ones nobody asked for.
class ObjectReader {
 public:
  ObjectReader(const json& object, std::string path) : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) fail(path_, "expected an object");
  }

  bool has(const std::string& key) const { return object_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return object_.at(key);
  }

  double number(const std::string& key) {
    if (!has(key)) fail(where(key), "missing required number");
    return as_number(raw(key), where(key));
  }

  std::optional<double> optional_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return as_number(raw(key), where(key));
  }

  int integer(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_number_integer()) fail(where(key), "expected an integer");
    return v.get<int>();
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_boolean()) fail(where(key), "expected true or false");
    return v.get<bool>();
  }

  std::optional<std::string> optional_string(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const json& v = raw(key);
    if (!v.is_string()) fail(where(key), "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    if (!has(key)) fail(where(key), "missing required array");
    const json& v = raw(key);
    if (!v.is_array()) fail(where(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(as_number(v[i], where(key) + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  /// Throws on the first key that was never read.
  void finish() const {
    for (const auto& item : object_.items()) {
      if (!seen_.count(item.key())) fail(where(item.key()), "unknown key");
    }
  }

  std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
  }

 private:
  static double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where, "expected a finite number");
    return x;
  }

  const json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

void require_positive(double x, const std::string& where) {
  if (!(x > 0.0)) ObjectReader::fail(where, "must be positive");
}

template <typename Enum>
Enum parse_choice(const std::string& text, const std::vector<std::pair<std::string, Enum>>& choices,
                  const std::string& where) {
  for (const auto& [name, value] : choices) {
    if (name == text) return value;
  }
  std::string allowed;
  for (const auto& [name, value] : choices) allowed += (allowed.empty() ? "" : "|") + name;
  ObjectReader::fail(where, "expected one of " + allowed + ", got \"" + text + "\"");
}

template <typename Enum>
std::string choice_name(Enum value, const std::vector<std::pair<std::string, Enum>>& choices) {
  for (const auto& [name, v] : choices) {
    if (v == value) return name;
  }
  return "unknown";
}

const std::vector<std::pair<std::string, EnvelopePath>> kEnvelopes{
    {"analytic", EnvelopePath::GaussianAnalytic},
    {"numeric", EnvelopePath::GaussianNumeric},
};
const std::vector<std::pair<std::string, ReservoirKindName>> kReservoirs{
    {"powerlaw", ReservoirKindName::PowerLaw},
    {"dot", ReservoirKindName::Dot},
};
const std::vector<std::pair<std::string, NonMarkovianModel>> kModels{
    {"integral", NonMarkovianModel::Integral},
    {"leading-order", NonMarkovianModel::LeadingOrder},
};
const std::vector<std::pair<std::string, OptimizeMethodName>> kMethods{
    {"analytic", OptimizeMethodName::Analytic},
    {"numeric", OptimizeMethodName::Numeric},
    {"both", OptimizeMethodName::Both},
};

MaterialBlock parse_material(const json& j) {
  ObjectReader r(j, "material");
  MaterialBlock block;
  if (r.has("preset")) {
    block.preset = *r.optional_string("preset");
    const MaterialPreset* preset = find_preset(block.preset);
    if (!preset) r.fail("material.preset", "unknown preset \"" + block.preset + "\"");
    for (const char* key : {"rho", "c", "sigma_e", "sigma_h"}) {
      if (r.has(key)) r.fail(r.where(key), "cannot be combined with a preset");
    }
    block.values = preset->material;
  } else {
    block.values.rho_kg_per_m3 = r.number("rho");
    block.values.sound_speed_m_per_s = r.number("c");
    block.values.sigma_e_ev = r.number("sigma_e");
    block.values.sigma_h_ev = r.number("sigma_h");
    require_positive(block.values.rho_kg_per_m3, "material.rho");
    require_positive(block.values.sound_speed_m_per_s, "material.c");
  }
  r.finish();
  return block;
}

DotGeometry parse_geometry(const json& j) {
  ObjectReader r(j, "geometry");
  DotGeometry g{r.number("l_e"), r.number("l_h"), r.number("l_z")};
  require_positive(g.l_e, "geometry.l_e");
  require_positive(g.l_h, "geometry.l_h");
  require_positive(g.l_z, "geometry.l_z");
  r.finish();
  return g;
}

PulseBlock parse_pulse(const json& j) {
  ObjectReader r(j, "pulse");
  PulseBlock p;
  p.alpha_over_pi = r.number("alpha");
  if (!(p.alpha_over_pi >= 0.0)) r.fail("pulse.alpha", "must be >= 0");
  if (auto e = r.optional_string("envelope")) p.envelope = parse_choice(*e, kEnvelopes, "pulse.envelope");
  r.finish();
  return p;
}

BathBlock parse_bath(const json& j) {
  ObjectReader r(j, "bath");
  BathBlock b;
  b.temperatures = r.numbers("temperatures");
  if (b.temperatures.empty()) r.fail("bath.temperatures", "must not be empty");
  for (std::size_t i = 0; i < b.temperatures.size(); ++i) {
    if (!(b.temperatures[i] >= 0.0)) r.fail("bath.temperatures[" + std::to_string(i) + "]", "must be >= 0");
  }
  if (auto k = r.optional_string("reservoir")) b.reservoir = parse_choice(*k, kReservoirs, "bath.reservoir");
  b.r0 = r.optional_number("R0");
  if (b.r0 && !(*b.r0 >= 0.0)) r.fail("bath.R0", "must be >= 0");
  if (auto m = r.optional_string("nonmarkovian")) b.nonmarkovian = parse_choice(*m, kModels, "bath.nonmarkovian");
  r.finish();
  return b;
}

double parse_markovian(const json& j) {
  ObjectReader r(j, "markovian");
  const double tau_r = r.number("tau_r");
  require_positive(tau_r, "markovian.tau_r");
  r.finish();
  return tau_r;
}

SweepBlock parse_sweep(const json& j) {
  ObjectReader r(j, "sweep");
  SweepBlock s;
  s.tau_min = r.number("tau_min");
  s.tau_max = r.number("tau_max");
  s.points = r.integer("points", 100);
  s.log_spacing = r.boolean("log", true);
  require_positive(s.tau_min, "sweep.tau_min");
  if (!(s.tau_max > s.tau_min)) r.fail("sweep.tau_max", "must exceed sweep.tau_min");
  if (s.points < 2) r.fail("sweep.points", "must be at least 2");
  r.finish();
  return s;
}

OptimizeBlock parse_optimize(const json& j) {
  ObjectReader r(j, "optimize");
  OptimizeBlock o;
  if (auto m = r.optional_string("method")) o.method = parse_choice(*m, kMethods, "optimize.method");
  if (auto lo = r.optional_number("tau_lo")) o.tau_lo = *lo;
  if (auto hi = r.optional_number("tau_hi")) o.tau_hi = *hi;
  require_positive(o.tau_lo, "optimize.tau_lo");
  if (!(o.tau_hi > o.tau_lo)) r.fail("optimize.tau_hi", "must exceed optimize.tau_lo");
  r.finish();
  return o;
}

SpectrumBlock parse_spectrum(const json& j) {
  ObjectReader r(j, "spectrum");
  SpectrumBlock s;
  if (auto t = r.optional_number("tau_g")) s.tau_g = *t;
  s.omega_max = r.optional_number("omega_max");
  s.points = r.integer("points", s.points);
  require_positive(s.tau_g, "spectrum.tau_g");
  if (s.omega_max) require_positive(*s.omega_max, "spectrum.omega_max");
  if (s.points < 3) r.fail("spectrum.points", "must be at least 3");
  r.finish();
  return s;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }

  ObjectReader r(root, "");
  RunConfig config;
  if (!r.has("material")) r.fail("material", "missing required block");
  if (!r.has("pulse")) r.fail("pulse", "missing required block");
  if (!r.has("bath")) r.fail("bath", "missing required block");
  config.material = parse_material(r.raw("material"));
  config.pulse = parse_pulse(r.raw("pulse"));
  config.bath = parse_bath(r.raw("bath"));
  if (r.has("geometry")) config.geometry = parse_geometry(r.raw("geometry"));
  if (r.has("markovian")) config.tau_r = parse_markovian(r.raw("markovian"));
  if (r.has("sweep")) config.sweep = parse_sweep(r.raw("sweep"));
  if (r.has("optimize")) config.optimize = parse_optimize(r.raw("optimize"));
  if (r.has("spectrum")) config.spectrum = parse_spectrum(r.raw("spectrum"));
  config.output = r.optional_string("output");
  r.finish();

  if (config.bath.reservoir == ReservoirKindName::Dot && !config.geometry) {
    throw ConfigError("geometry: required when bath.reservoir is \"dot\"");
  }
  const bool preset_has_tau_r =
      !config.material.preset.empty() && find_preset(config.material.preset)->calibrated_tau_r > 0.0;
  if (!config.tau_r && !preset_has_tau_r) {
    throw ConfigError("markovian.tau_r: required unless the material preset supplies it");
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open configuration file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& c) {
  json root;
  if (!c.material.preset.empty()) {
    root["material"] = {{"preset", c.material.preset}};
  } else {
    root["material"] = {{"rho", c.material.values.rho_kg_per_m3},
                        {"c", c.material.values.sound_speed_m_per_s},
                        {"sigma_e", c.material.values.sigma_e_ev},
                        {"sigma_h", c.material.values.sigma_h_ev}};
  }
  if (c.geometry) root["geometry"] = {{"l_e", c.geometry->l_e}, {"l_h", c.geometry->l_h}, {"l_z", c.geometry->l_z}};
  root["pulse"] = {{"alpha", c.pulse.alpha_over_pi}, {"envelope", choice_name(c.pulse.envelope, kEnvelopes)}};
  json bath = {{"temperatures", c.bath.temperatures},
               {"reservoir", choice_name(c.bath.reservoir, kReservoirs)},
               {"nonmarkovian", choice_name(c.bath.nonmarkovian, kModels)}};
  if (c.bath.r0) bath["R0"] = *c.bath.r0;
  root["bath"] = bath;
  if (c.tau_r) root["markovian"] = {{"tau_r", *c.tau_r}};
  if (c.sweep) {
    root["sweep"] = {{"tau_min", c.sweep->tau_min},
                     {"tau_max", c.sweep->tau_max},
                     {"points", c.sweep->points},
                     {"log", c.sweep->log_spacing}};
  }
  root["optimize"] = {
      {"method", choice_name(c.optimize.method, kMethods)}, {"tau_lo", c.optimize.tau_lo}, {"tau_hi", c.optimize.tau_hi}};
  if (c.spectrum) {
    json s = {{"tau_g", c.spectrum->tau_g}, {"points", c.spectrum->points}};
    if (c.spectrum->omega_max) s["omega_max"] = *c.spectrum->omega_max;
    root["spectrum"] = s;
  }
  if (c.output) root["output"] = *c.output;
  return root.dump(2) + "\n";
}

TradeoffModel ResolvedModel::at_temperature(double temperature, const RunConfig& config) const {
  TradeoffModel model;
  model.alpha = alpha;
  model.envelope = config.pulse.envelope;
  model.reservoir = reservoir;
  model.temperature = temperature;
  model.channel = channel;
  model.model = config.bath.nonmarkovian;
  return model;
}

ResolvedModel resolve(const RunConfig& config) {
  ResolvedModel resolved;
  const MaterialPreset* preset = config.material.preset.empty() ? nullptr : find_preset(config.material.preset);
  try {
    resolved.material = convert_material(config.material.values);
  } catch (const InvalidParameter& e) {
    throw ConfigError(std::string("material: ") + e.what());
  }
  resolved.alpha = config.pulse.alpha_over_pi * units::kPi;

  if (config.bath.r0) {
    resolved.r0 = *config.bath.r0;
  } else if (preset && preset->calibrated_r0 > 0.0) {
    resolved.r0 = preset->calibrated_r0;
    resolved.r0_calibrated = true;
  } else {
    resolved.r0 = r0_coefficient(resolved.material);
  }

  if (config.tau_r) {
    resolved.channel.tau_r = *config.tau_r;
  } else {
    resolved.channel.tau_r = preset->calibrated_tau_r;
    resolved.tau_r_calibrated = true;
  }

  try {
    if (config.bath.reservoir == ReservoirKindName::PowerLaw) {
      resolved.reservoir = ReservoirSpectrum::power_law(resolved.r0);
    } else {
      resolved.reservoir = ReservoirSpectrum::quantum_dot(resolved.material, *config.geometry, resolved.r0);
    }
  } catch (const InvalidParameter& e) {
    throw ConfigError(std::string("bath: ") + e.what());
  }
  return resolved;
}

std::vector<double> sweep_durations(const SweepBlock& sweep) {
  std::vector<double> out(static_cast<std::size_t>(sweep.points));
  const double last = static_cast<double>(sweep.points - 1);
  for (int i = 0; i < sweep.points; ++i) {
    const double f = static_cast<double>(i) / last;
    out[static_cast<std::size_t>(i)] = sweep.log_spacing
                                           ? sweep.tau_min * std::pow(sweep.tau_max / sweep.tau_min, f)
                                           : sweep.tau_min + (sweep.tau_max - sweep.tau_min) * f;
  }
  out.front() = sweep.tau_min;
  out.back() = sweep.tau_max;
  return out;
}

}  // namespace decotrade::cli
