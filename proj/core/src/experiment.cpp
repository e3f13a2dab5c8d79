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

#include "qccnn/experiment.hpp"

#include <cmath>

#include "qccnn/error.hpp"
#include "qccnn/random.hpp"
#include "qccnn/tetris.hpp"

namespace qccnn {
namespace {

enum SeedStream : std::uint64_t { kDataStream = 0, kSplitStream = 1, kInitStream = 2, kShuffleStream = 3 };

constexpr WindowSpec kConvWindow{2, 2, 1, 0};

LayerSpec conv(Model model, std::size_t filters, std::size_t depth) {
  return model == Model::kQccnn ? LayerSpec::quantum_conv(kConvWindow, filters, depth)
                                : LayerSpec::classical_conv(kConvWindow, filters, true);
}

}  // namespace

std::string to_string(Model model) { return model == Model::kQccnn ? "qccnn" : "cnn"; }

std::string to_string(Architecture arch) {
  return arch == Architecture::kOneLayer ? "one-layer" : "two-layer";
}

Model parse_model(std::string_view text) {
  if (text == "qccnn") return Model::kQccnn;
  if (text == "cnn") return Model::kCnn;
  throw ConfigError("model", "expected qccnn or cnn, got '" + std::string(text) + "'");
}

Architecture parse_architecture(std::string_view text) {
  if (text == "one-layer") return Architecture::kOneLayer;
  if (text == "two-layer") return Architecture::kTwoLayer;
  throw ConfigError("arch", "expected one-layer or two-layer, got '" + std::string(text) + "'");
}

NetworkSpec make_network_spec(Architecture arch, Model model, std::size_t n_classes,
                              std::size_t circuit_depth) {
  NetworkSpec spec;
  spec.input = Shape{kGridSize, kGridSize, 1};
  spec.n_classes = n_classes;
  if (arch == Architecture::kOneLayer) {
    spec.layers = {conv(model, 5, circuit_depth), LayerSpec::max_pool({2, 2, 1, 0}),
                   LayerSpec::dense(n_classes)};
  } else {
    spec.layers = {conv(model, 2, circuit_depth), conv(model, 3, circuit_depth),
                   LayerSpec::max_pool({2, 2, 1, 1}), LayerSpec::dense(n_classes)};
  }
  return spec;
}

std::vector<std::string> label_subset(std::size_t labels) {
  if (labels == 2) return {"S", "T"};
  if (labels == 5) return {kBrickNames.begin(), kBrickNames.end()};
  throw ConfigError("labels", "expected 2 or 5, got " + std::to_string(labels));
}

std::vector<std::uint64_t> default_seeds(std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = i;
  return seeds;
}

void ExperimentConfig::validate() const {
  label_subset(labels);
  if (dataset_size < 2) throw ConfigError("dataset_size", "must be at least 2");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ConfigError("train_fraction", "must lie in (0, 1)");
  }
  if (seeds.empty()) throw ConfigError("seeds", "at least one seed is required");
  if (model == Model::kQccnn && circuit_depth > 64) {
    throw ConfigError("depth", "circuit depth above 64 is not supported");
  }
  train.validate();
}

SeedData prepare_seed_data(const ExperimentConfig& config, std::uint64_t seed) {
  const Dataset full = generate_dataset(config.dataset_size, derive_seed(seed, kDataStream));
  auto [train, test] = split(full, config.train_fraction, derive_seed(seed, kSplitStream));
  const std::vector<std::string> names = label_subset(config.labels);
  SeedData data{filter_labels(train, names), filter_labels(test, names)};
  if (data.train.size() == 0 || data.test.size() == 0) {
    throw ConfigError("dataset_size", "too small: a split side has no samples of the chosen labels");
  }
  return data;
}

Network make_seed_network(const ExperimentConfig& config, std::uint64_t seed) {
  Network net(make_network_spec(config.arch, config.model, config.labels, config.circuit_depth));
  Rng rng(derive_seed(seed, kInitStream));
  net.initialize(rng);
  return net;
}

SeedResult run_seed(const ExperimentConfig& config, std::uint64_t seed,
                    const MetricsCallback& on_record) {
  const SeedData data = prepare_seed_data(config, seed);
  Network net = make_seed_network(config, seed);
  TrainConfig tc = config.train;
  tc.shuffle_seed = derive_seed(seed, kShuffleStream);
  SeedResult result;
  result.seed = seed;
  result.train_size = data.train.size();
  result.test_size = data.test.size();
  result.metrics = train(net, data.train, data.test, tc, on_record);
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const ProgressCallback& progress) {
  config.validate();
  ExperimentResult result{config, {}, {}};
  for (std::uint64_t seed : config.seeds) {
    MetricsCallback cb;
    if (progress) cb = [&](const MetricsRecord& r) { progress(seed, r); };
    result.runs.push_back(run_seed(config, seed, cb));
  }
  result.mean = average_metrics(result.runs);
  return result;
}

std::vector<MetricsRecord> average_metrics(const std::vector<SeedResult>& runs) {
  if (runs.empty()) return {};
  const std::size_t len = runs.front().metrics.size();
  for (const SeedResult& r : runs) {
    if (r.metrics.size() != len) throw ShapeError("seed runs have different record counts");
  }
  std::vector<MetricsRecord> mean(len);
  const double scale = 1.0 / static_cast<double>(runs.size());
  for (std::size_t i = 0; i < len; ++i) {
    mean[i].iteration = runs.front().metrics[i].iteration;
    for (const SeedResult& r : runs) {
      mean[i].train_loss += r.metrics[i].train_loss;
      mean[i].test_loss += r.metrics[i].test_loss;
      mean[i].test_accuracy += r.metrics[i].test_accuracy;
    }
    mean[i].train_loss *= scale;
    mean[i].test_loss *= scale;
    mean[i].test_accuracy *= scale;
  }
  return mean;
}

}  // namespace qccnn
