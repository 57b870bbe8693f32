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

#include <string>

#include "gtest/gtest.h"

using namespace decotrade;
using namespace decotrade::cli;

namespace {

const char* kMinimal = R"({
  "material": {"preset": "gaas-calibrated"},
  "pulse": {"alpha": 0.5},
  "bath": {"temperatures": [0]}
})";

// Returns the ConfigError message, or "" if parsing succeeded.
std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseConfig, MinimalUsesDefaults) {
  const RunConfig c = parse_config(kMinimal);
  EXPECT_EQ(c.material.preset, "gaas-calibrated");
  EXPECT_EQ(c.pulse.envelope, EnvelopePath::GaussianAnalytic);
  EXPECT_EQ(c.bath.reservoir, ReservoirKindName::PowerLaw);
  EXPECT_EQ(c.bath.nonmarkovian, NonMarkovianModel::Integral);
  EXPECT_FALSE(c.tau_r);
  EXPECT_FALSE(c.sweep);
  EXPECT_EQ(c.optimize.method, OptimizeMethodName::Both);
}

TEST(ParseConfig, UnknownKeysAreRejectedByName) {
  EXPECT_NE(config_error(R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": 0.5},
                              "bath": {"temperatures": [0]}, "colour": 1})")
                .find("colour: unknown key"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": 0.5, "sigma": 1},
                              "bath": {"temperatures": [0]}})")
                .find("pulse.sigma: unknown key"),
            std::string::npos);
}

TEST(ParseConfig, TypeAndRangeErrorsNameTheKey) {
  EXPECT_NE(config_error(R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": "half"},
                              "bath": {"temperatures": [0]}})")
                .find("pulse.alpha"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": 0.5},
                              "bath": {"temperatures": [0, -4]}})")
                .find("bath.temperatures[1]"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": 0.5},
                              "bath": {"temperatures": [0], "reservoir": "ohmic"}})")
                .find("bath.reservoir: expected one of"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": 0.5},
                              "bath": {"temperatures": [0]}, "sweep": {"tau_min": 2, "tau_max": 1}})")
                .find("sweep.tau_max"),
            std::string::npos);
  EXPECT_NE(config_error("{not json").find("malformed JSON"), std::string::npos);
}

TEST(ParseConfig, MaterialPresetAndExplicitValuesDoNotMix) {
  EXPECT_NE(config_error(R"({"material": {"preset": "gaas-calibrated", "rho": 1000},
                              "pulse": {"alpha": 0.5}, "bath": {"temperatures": [0]}})")
                .find("material.rho: cannot be combined with a preset"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"material": {"preset": "unobtainium"},
                              "pulse": {"alpha": 0.5}, "bath": {"temperatures": [0]}})")
                .find("unknown preset"),
            std::string::npos);
}

TEST(ParseConfig, ExplicitMaterialNeedsMarkovianTime) {
  const std::string without = R"({"material": {"rho": 5370, "c": 5110, "sigma_e": -14.6, "sigma_h": -5.1},
                                  "pulse": {"alpha": 0.5}, "bath": {"temperatures": [0]}})";
  EXPECT_NE(config_error(without).find("markovian.tau_r"), std::string::npos);
  const std::string with = R"({"material": {"rho": 5370, "c": 5110, "sigma_e": -14.6, "sigma_h": -5.1},
                               "pulse": {"alpha": 0.5}, "bath": {"temperatures": [0]},
                               "markovian": {"tau_r": 630}})";
  EXPECT_EQ(config_error(with), "");
}

TEST(ParseConfig, DotNeedsGeometry) {
  EXPECT_NE(config_error(R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": 0.5},
                              "bath": {"temperatures": [0], "reservoir": "dot"}})")
                .find("geometry"),
            std::string::npos);
}

TEST(SerializeConfig, RoundTrip) {
  const RunConfig c = parse_config(R"({
    "material": {"rho": 2329, "c": 8433, "sigma_e": 8.7, "sigma_h": -2.1},
    "geometry": {"l_e": 4, "l_h": 3.2, "l_z": 0.8},
    "pulse": {"alpha": 0.25, "envelope": "numeric"},
    "bath": {"temperatures": [0, 4.2, 77], "reservoir": "dot", "R0": 0.001, "nonmarkovian": "integral"},
    "markovian": {"tau_r": 1000},
    "sweep": {"tau_min": 0.5, "tau_max": 50, "points": 17, "log": false},
    "optimize": {"method": "numeric", "tau_lo": 0.1, "tau_hi": 40},
    "spectrum": {"tau_g": 3, "omega_max": 8, "points": 101},
    "output": "out.csv"
  })");
  const std::string text = serialize_config(c);
  EXPECT_EQ(parse_config(text), c);
  EXPECT_EQ(serialize_config(parse_config(text)), text);
  EXPECT_EQ(parse_config(serialize_config(parse_config(kMinimal))), parse_config(kMinimal));
}

TEST(Resolve, CalibratedPresetSuppliesR0AndTauR) {
  const ResolvedModel m = resolve(parse_config(kMinimal));
  EXPECT_EQ(m.r0, 0.00756);
  EXPECT_EQ(m.channel.tau_r, 630.0);
  EXPECT_TRUE(m.r0_calibrated);
  EXPECT_TRUE(m.tau_r_calibrated);
  EXPECT_DOUBLE_EQ(m.alpha, M_PI / 2);
}

TEST(Resolve, R0Precedence) {
  const ResolvedModel overridden = resolve(parse_config(R"({"material": {"preset": "gaas-calibrated"},
      "pulse": {"alpha": 0.5}, "bath": {"temperatures": [0], "R0": 0.01}, "markovian": {"tau_r": 100}})"));
  EXPECT_EQ(overridden.r0, 0.01);
  EXPECT_FALSE(overridden.r0_calibrated);
  EXPECT_EQ(overridden.channel.tau_r, 100.0);
  EXPECT_FALSE(overridden.tau_r_calibrated);

  const ResolvedModel derived = resolve(parse_config(R"({
      "material": {"rho": 5370, "c": 5110, "sigma_e": -14.6, "sigma_h": -5.1},
      "pulse": {"alpha": 0.5}, "bath": {"temperatures": [0]}, "markovian": {"tau_r": 630}})"));
  EXPECT_NEAR(derived.r0, 0.00743521094009342, 1e-15);
  EXPECT_FALSE(derived.r0_calibrated);
}

TEST(SweepDurations, ExactEndpointsAndSpacing) {
  const auto log = sweep_durations({0.1, 100.0, 4, true});
  ASSERT_EQ(log.size(), 4u);
  EXPECT_EQ(log.front(), 0.1);
  EXPECT_EQ(log.back(), 100.0);
  EXPECT_NEAR(log[1], 1.0, 1e-14);
  EXPECT_NEAR(log[2], 10.0, 1e-13);
  const auto lin = sweep_durations({1.0, 4.0, 4, false});
  EXPECT_EQ(lin, (std::vector<double>{1.0, 2.0, 3.0, 4.0}));
}
