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

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "decotrade/errors.hpp"
#include "run_config.hpp"

namespace fs = std::filesystem;
using namespace decotrade::cli;

namespace {

fs::path output_path(const std::string& flag, const RunConfig& config) {
  if (!flag.empty()) return flag;
  if (config.output) return *config.output;
  throw ConfigError("output: no -o given and the configuration has no \"output\" entry");
}

int run_sweep(const fs::path& config_path, const std::string& out_flag, bool quiet) {
  const RunConfig config = load_config(config_path);
  const fs::path out = output_path(out_flag, config);
  const auto rows = compute_sweep(config);
  write_file(out, sweep_csv(rows));
  if (!quiet) std::cout << "wrote " << rows.size() << " rows to " << out.string() << "\n";
  return kExitOk;
}

int run_optimize(const fs::path& config_path, const std::string& out_flag, bool quiet) {
  const RunConfig config = load_config(config_path);
  fs::path record;
  if (!out_flag.empty()) {
    record = out_flag;
  } else if (config.output) {
    record = *config.output;
  } else {
    record = config_path;
    record.replace_extension(".optimum.json");
  }
  const OptimizeReport report = compute_optimize(config);
  write_file(record, optimize_record(report));
  if (!quiet) std::cout << optimize_text(report) << "record: " << record.string() << "\n";
  return kExitOk;
}

int run_spectrum(const fs::path& config_path, const std::string& out_flag, bool quiet) {
  const RunConfig config = load_config(config_path);
  const fs::path out = output_path(out_flag, config);
  const auto tables = compute_spectrum(config);
  for (const auto& table : tables) {
    const fs::path path = tables.size() == 1 ? out : spectrum_path_for(out, table.temperature);
    write_file(path, spectrum_csv(table));
    if (!quiet) std::cout << "wrote " << table.rows.size() << " rows to " << path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate-duration trade-off between phonon dressing and Markovian damping"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  bool quiet = false;

  auto add_common = [&](CLI::App* sub, bool needs_output) {
    sub->add_option("config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", out_flag,
                    needs_output ? "output CSV (overrides the config's \"output\")" : "record file (JSON)");
    sub->add_flag("-q,--quiet", quiet, "suppress the report on stdout");
  };
  CLI::App* sweep = app.add_subcommand("sweep", "tabulate the error budget over gate durations");
  add_common(sweep, true);
  CLI::App* optimize = app.add_subcommand("optimize", "find the gate duration with minimal total error");
  add_common(optimize, false);
  CLI::App* spectrum = app.add_subcommand("spectrum", "tabulate R(omega) and S(omega)");
  add_common(spectrum, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep->parsed()) return run_sweep(config_path, out_flag, quiet);
    if (optimize->parsed()) return run_optimize(config_path, out_flag, quiet);
    if (spectrum->parsed()) return run_spectrum(config_path, out_flag, quiet);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const decotrade::InvalidParameter& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const decotrade::NumericalFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const decotrade::DomainError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
