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

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace decotrade;
using namespace decotrade::cli;
namespace fs = std::filesystem;

namespace {

RunConfig power_law_config(double alpha_over_pi, const std::string& extra = "") {
  return parse_config(R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": )" +
                      std::to_string(alpha_over_pi) + R"(}, "bath": {"temperatures": [0])" + extra + "}}");
}

RunConfig dot_config(double l_e, const std::string& temperatures) {
  std::ostringstream s;
  s << R"({"material": {"preset": "gaas-calibrated"}, "geometry": {"l_e": )" << l_e << R"(, "l_h": )" << 0.8 * l_e
    << R"(, "l_z": )" << 0.2 * l_e << R"(}, "pulse": {"alpha": 0.5}, "bath": {"temperatures": )" << temperatures
    << R"(, "reservoir": "dot"}, "sweep": {"tau_min": 0.1, "tau_max": 100, "points": 120},
         "optimize": {"method": "numeric"}, "spectrum": {"tau_g": 2, "omega_max": 10, "points": 401}})";
  return parse_config(s.str());
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("decotrade_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string command = std::string(DECOTRADE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(FormatNumber, NineSignificantDigits) {
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(630.0), "630");
  EXPECT_EQ(format_number(1.23456789012e-7), "1.23456789e-07");
}

TEST(Sweep, HeaderAndDeterminism) {
  RunConfig c = dot_config(4.0, "[0, 10]");
  const std::string first = sweep_csv(compute_sweep(c));
  EXPECT_EQ(first.substr(0, first.find('\n')), kSweepHeader);
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 1 + 2 * 120);
  EXPECT_EQ(sweep_csv(compute_sweep(c)), first);
}

TEST(Sweep, RequiresSweepBlock) { EXPECT_THROW(compute_sweep(power_law_config(0.5)), ConfigError); }

TEST(Sweep, LeadingOrderMinimumNearCalibratedOptimum) {
  const RunConfig c = power_law_config(
      0.5, R"(, "nonmarkovian": "leading-order"}, "sweep": {"tau_min": 0.1, "tau_max": 100, "points": 400)");
  const auto rows = compute_sweep(c);
  const auto best = std::min_element(rows.begin(), rows.end(),
                                     [](const auto& a, const auto& b) { return a.delta_total < b.delta_total; });
  const double scale = std::pow(M_PI / 2, 2.0 / 3.0);
  EXPECT_NEAR(best->tau_g / (scale * 1.47), 1.0, 0.05);
  EXPECT_NEAR(best->delta_total / (scale * 0.0035), 1.0, 0.05);
}

TEST(Sweep, ZeroRotationHasOnlyMarkovianError) {
  const auto rows = compute_sweep(power_law_config(0.0, R"(}, "sweep": {"tau_min": 0.1, "tau_max": 10, "points": 5)"));
  for (const auto& r : rows) {
    EXPECT_EQ(r.delta_nm, 0.0);
    EXPECT_EQ(r.delta_total, r.delta_m);
  }
}

TEST(Sweep, WarmerAndSmallerDotsAreWorse) {
  const auto small = compute_sweep(dot_config(4.0, "[0, 10]"));
  const auto large = compute_sweep(dot_config(6.0, "[0, 10]"));
  const std::size_t n = 120;
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_GT(small[n + i].delta_total, small[i].delta_total);
    EXPECT_GT(large[n + i].delta_total, large[i].delta_total);
  }
}

TEST(Optimize, AnalyticAtBitFlip) {
  const auto report = compute_optimize(power_law_config(1.0, R"(}, "optimize": {"method": "analytic")"));
  ASSERT_EQ(report.entries.size(), 1u);
  const auto& r = report.entries[0].result;
  EXPECT_NEAR(r.tau_opt, std::pow(M_PI, 2.0 / 3.0) * 1.47, 0.01);
  EXPECT_NEAR(r.budget.delta_m / r.budget.delta_nm, 2.0, 0.01);
  EXPECT_TRUE(report.calibrated);
}

TEST(Optimize, BothMethodsReported) {
  const auto report = compute_optimize(power_law_config(0.5));
  ASSERT_EQ(report.entries.size(), 2u);
  EXPECT_EQ(report.entries[0].result.method, OptimizationMethod::AnalyticPowerLaw);
  EXPECT_EQ(report.entries[1].result.method, OptimizationMethod::NumericScan);
  const std::string record = optimize_record(report);
  EXPECT_NE(record.find("\"tau_opt_ps\""), std::string::npos);
  EXPECT_NE(optimize_text(report).find("(calibrated preset)"), std::string::npos);
}

TEST(Spectrum, ColdReservoirHasNoAbsorption) {
  const auto tables = compute_spectrum(dot_config(4.0, "[0, 10]"));
  ASSERT_EQ(tables.size(), 2u);
  const auto& cold = tables[0].rows;
  const auto& warm = tables[1].rows;
  ASSERT_EQ(cold.size(), 401u);
  for (std::size_t i = 0; i < cold.size(); ++i) {
    if (cold[i].omega < 0.0) EXPECT_EQ(cold[i].r, 0.0);
    if (cold[i].omega < 0.0) EXPECT_GT(warm[i].r, 0.0);
    // Grid is exactly symmetric and S is even.
    const auto& mirror = cold[cold.size() - 1 - i];
    EXPECT_EQ(mirror.omega, -cold[i].omega);
    EXPECT_NEAR(mirror.s, cold[i].s, 1e-9 * std::max(cold[i].s, 1e-300));
  }
  EXPECT_EQ(spectrum_csv(tables[0]).substr(0, std::string(kSpectrumHeader).size()), kSpectrumHeader);
}

TEST(Spectrum, DotDensityRisesThenDecays) {
  // The anisotropic form factor reaches out to about c / l_z, not c / l_e.
  RunConfig c = dot_config(4.0, "[0]");
  c.spectrum->omega_max = 40.0;
  const auto rows = compute_spectrum(c)[0].rows;
  const auto peak = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  EXPECT_GT(peak->omega, 0.0);
  EXPECT_LT(peak->omega, rows.back().omega);
  EXPECT_LT(rows.back().r, 0.05 * peak->r);
}

TEST(Spectrum, GatePeaksNearRabiShift) {
  // At alpha = pi the two lobes of S are resolved; at pi/2 they merge into one peak at 0.
  RunConfig c = dot_config(4.0, "[0]");
  c.pulse.alpha_over_pi = 1.0;
  c.spectrum = SpectrumBlock{2.0, 2.0, 801};
  const auto rows = compute_spectrum(c)[0].rows;
  const auto peak = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.s < b.s; });
  const double shift = M_PI / (std::sqrt(2 * M_PI) * 2.0);
  EXPECT_NEAR(std::abs(peak->omega), shift, 0.1 / 2.0);
}

TEST(Spectrum, PerTemperaturePath) {
  EXPECT_EQ(spectrum_path_for("dir/out.csv", 10.0), fs::path("dir/out_T10K.csv"));
  EXPECT_EQ(spectrum_path_for("out.csv", 4.2), fs::path("out_T4.2K.csv"));
}

TEST(WriteFile, UnwritableTargetIsIoError) {
  EXPECT_THROW(write_file("/nonexistent-dir/x.csv", "x"), IoError);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch_dir("exit_codes");
  auto write = [&](const std::string& name, const std::string& text) {
    write_file(dir / name, text);
    return (dir / name).string();
  };
  const std::string good = write("good.json", R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": 0.5},
      "bath": {"temperatures": [0]}, "sweep": {"tau_min": 0.5, "tau_max": 5, "points": 8}})");
  const std::string bad = write("bad.json", R"({"material": {"preset": "gaas-calibrated"}, "pulse": {"alpha": 0.5},
      "bath": {"temperatures": [0]}, "sweep": {"tau_min": 0.5, "tau_max": 5, "pionts": 8}})");
  const std::string undamped = write("undamped.json", R"({"material": {"preset": "gaas-calibrated"},
      "pulse": {"alpha": 0.5}, "bath": {"temperatures": [0]}, "markovian": {"tau_r": 1e300},
      "optimize": {"method": "numeric", "tau_lo": 0.1, "tau_hi": 10}})");

  const fs::path out = dir / "out.csv";
  EXPECT_EQ(run_cli("sweep " + good + " -o " + out.string() + " --quiet"), kExitOk);
  EXPECT_EQ(read_file(out).substr(0, std::string(kSweepHeader).size()), kSweepHeader);
  EXPECT_EQ(run_cli("sweep " + bad + " -o " + out.string()), kExitConfig);
  EXPECT_EQ(run_cli("sweep " + good), kExitConfig);  // no output destination
  EXPECT_EQ(run_cli("optimize " + undamped + " -o " + (dir / "o.json").string()), kExitNumeric);
  EXPECT_EQ(run_cli("sweep " + good + " -o /nonexistent-dir/out.csv"), kExitIo);
  EXPECT_EQ(run_cli("frobnicate"), kExitUsage);
  fs::remove_all(dir);
}

TEST(Cli, SweepOutputIsByteIdenticalAcrossRuns) {
  const fs::path dir = scratch_dir("determinism");
  const fs::path config = fs::path(DECOTRADE_CONFIG_DIR) / "dot_le4nm.json";
  ASSERT_EQ(run_cli("sweep " + config.string() + " -o " + (dir / "a.csv").string() + " -q"), kExitOk);
  ASSERT_EQ(run_cli("sweep " + config.string() + " -o " + (dir / "b.csv").string() + " -q"), kExitOk);
  const std::string a = read_file(dir / "a.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, read_file(dir / "b.csv"));
  fs::remove_all(dir);
}

TEST(Cli, MultiTemperatureSpectrumWritesOneFilePerTemperature) {
  const fs::path dir = scratch_dir("spectrum");
  const fs::path config = fs::path(DECOTRADE_CONFIG_DIR) / "dot_le6nm.json";
  ASSERT_EQ(run_cli("spectrum " + config.string() + " -o " + (dir / "s.csv").string() + " -q"), kExitOk);
  EXPECT_TRUE(fs::exists(dir / "s_T0K.csv"));
  EXPECT_TRUE(fs::exists(dir / "s_T10K.csv"));
  fs::remove_all(dir);
}
