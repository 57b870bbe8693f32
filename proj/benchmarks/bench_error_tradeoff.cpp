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

#include <cmath>
#include <vector>

#include "benchmark/benchmark.h"
#include "decotrade/error_tradeoff.hpp"

using namespace decotrade;

namespace {

MaterialParams gaas() { return convert_material({5370.0, 5110.0, -14.6, -5.1}); }

ReservoirSpectrum dot() { return ReservoirSpectrum::quantum_dot(gaas(), {4.0, 3.2, 0.8}, 0.00756); }

void BM_CutoffFunction(benchmark::State& state) {
  const MaterialParams m = gaas();
  double w = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff_function(w, m, {4.0, 3.2, 0.8}));
    w = w > 20.0 ? 0.1 : w * 1.01;
  }
}
BENCHMARK(BM_CutoffFunction);

void BM_GateSpectrumNumeric(benchmark::State& state) {
  const GateSpectrum g({M_PI / 2, 2.0, EnvelopePath::GaussianNumeric});
  double w = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g(w));
    w = w > 5.0 ? -5.0 : w + 0.01;
  }
}
BENCHMARK(BM_GateSpectrumNumeric);

void BM_NonMarkovianPowerLaw(benchmark::State& state) {
  const auto r = ReservoirSpectrum::power_law(0.00756);
  const double temperature = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonmarkovian_error(PulseSpec{M_PI / 2, 2.0}, r, temperature));
}
BENCHMARK(BM_NonMarkovianPowerLaw)->Arg(0)->Arg(77);

void BM_NonMarkovianDot(benchmark::State& state) {
  const auto r = dot();
  const double temperature = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonmarkovian_error(PulseSpec{M_PI / 2, 2.0}, r, temperature));
}
BENCHMARK(BM_NonMarkovianDot)->Arg(0)->Arg(10);

void BM_NonMarkovianNumericEnvelope(benchmark::State& state) {
  const auto r = dot();
  const PulseSpec p{M_PI / 2, 2.0, EnvelopePath::GaussianNumeric};
  for (auto _ : state) benchmark::DoNotOptimize(nonmarkovian_error(p, r, 10.0));
}
BENCHMARK(BM_NonMarkovianNumericEnvelope)->Unit(benchmark::kMillisecond);

void BM_NumericOptimumDot(benchmark::State& state) {
  TradeoffModel model;
  model.alpha = M_PI / 2;
  model.reservoir = dot();
  model.temperature = 10.0;
  model.channel = {630.0};
  for (auto _ : state) benchmark::DoNotOptimize(numeric_optimum(model, {0.05, 200.0}));
}
BENCHMARK(BM_NumericOptimumDot)->Unit(benchmark::kMillisecond);

void BM_SweepDot(benchmark::State& state) {
  TradeoffModel model;
  model.alpha = M_PI / 2;
  model.reservoir = dot();
  model.temperature = 10.0;
  model.channel = {630.0};
  std::vector<double> durations(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < durations.size(); ++i) {
    durations[i] = 0.1 * std::pow(1000.0, static_cast<double>(i) / static_cast<double>(durations.size() - 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(sweep(model, durations));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepDot)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
