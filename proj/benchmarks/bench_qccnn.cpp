// Copyright 2026 The QCCNN Authors
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

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "qccnn/experiment.hpp"
#include "qccnn/pqc.hpp"
#include "qccnn/random.hpp"
#include "qccnn/statevector.hpp"
#include "qccnn/trainer.hpp"

namespace {

using namespace qccnn;

std::vector<double> draw(Rng& rng, std::size_t n, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(0.0, hi);
  return v;
}

void BM_ApplyRy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Statevector psi(n);
  double angle = 0.1;
  for (auto _ : state) {
    for (std::size_t q = 0; q < n; ++q) psi.apply_ry(q, angle);
    angle += 1e-3;
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ApplyRy)->Arg(4)->Arg(10)->Arg(16);

void BM_QuantumFeatureReference(benchmark::State& state) {
  const CircuitSpec spec = build_circuit(4, static_cast<std::size_t>(state.range(0)));
  Rng rng(1);
  const auto params = draw(rng, spec.param_count(), 2 * std::numbers::pi);
  const auto window = draw(rng, 4, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(quantum_feature(spec, params, window));
}
BENCHMARK(BM_QuantumFeatureReference)->DenseRange(1, 4);

void BM_EvaluatorValue(benchmark::State& state) {
  FeatureEvaluator ev(build_circuit(4, static_cast<std::size_t>(state.range(0))));
  Rng rng(2);
  ev.set_params(draw(rng, ev.spec().param_count(), 2 * std::numbers::pi));
  const auto window = draw(rng, 4, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ev.value(window));
}
BENCHMARK(BM_EvaluatorValue)->DenseRange(1, 4);

// Value plus all parameter and input gradients of one 2x2 window.
void BM_EvaluatorGradients(benchmark::State& state) {
  FeatureEvaluator ev(build_circuit(4, static_cast<std::size_t>(state.range(0))));
  Rng rng(3);
  ev.set_params(draw(rng, ev.spec().param_count(), 2 * std::numbers::pi));
  const auto window = draw(rng, 4, 1.0);
  std::vector<double> pg(ev.spec().param_count());
  std::vector<double> wg(4);
  for (auto _ : state) benchmark::DoNotOptimize(ev.value_and_gradients(window, pg, wg));
}
BENCHMARK(BM_EvaluatorGradients)->DenseRange(1, 4);

void BM_ParamShiftGradReference(benchmark::State& state) {
  const CircuitSpec spec = build_circuit(4, 4);
  Rng rng(4);
  const auto params = draw(rng, spec.param_count(), 2 * std::numbers::pi);
  const auto window = draw(rng, 4, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(param_shift_grad(spec, params, window));
}
BENCHMARK(BM_ParamShiftGradReference);

// One full-batch gradient over the 5-label training split (about 800 images).
void BM_BatchGradient(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.arch = state.range(0) == 1 ? Architecture::kOneLayer : Architecture::kTwoLayer;
  cfg.model = state.range(1) == 0 ? Model::kQccnn : Model::kCnn;
  cfg.labels = 5;
  const SeedData data = prepare_seed_data(cfg, 0);
  const Network net = make_seed_network(cfg, 0);
  std::vector<std::size_t> idx(data.train.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(batch_gradient(net, data.train, idx).loss);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(idx.size()));
}
BENCHMARK(BM_BatchGradient)
    ->ArgsProduct({{1, 2}, {0, 1}})
    ->ArgNames({"layers", "cnn"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
