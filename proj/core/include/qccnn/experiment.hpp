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

/**
 * @file
 * The two benchmark architectures and multi-seed experiment runs.
 *
 *   one-layer: conv 2x2 (5 filters) -> max pool 2x2 -> dense
 *              3x3x1 -> 2x2x5 -> 1x1x5 -> classes
 *   two-layer: conv 2x2 (2 filters) -> conv 2x2 (3 filters)
 *              -> max pool 2x2 with padding 1 -> dense
 *              3x3x1 -> 2x2x2 -> 1x1x6 -> 2x2x6 -> classes
 *
 * All windows use stride 1. "qccnn" uses quantum convolutions (depth 4 by
 * default); "cnn" uses classical convolutions followed by ReLU.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qccnn/network.hpp"
#include "qccnn/trainer.hpp"

namespace qccnn {

enum class Model { kQccnn, kCnn };
enum class Architecture { kOneLayer, kTwoLayer };

std::string to_string(Model model);
std::string to_string(Architecture arch);
/// Accepts "qccnn" / "cnn". Throws ConfigError("model", ...).
Model parse_model(std::string_view text);
/// Accepts "one-layer" / "two-layer". Throws ConfigError("arch", ...).
Architecture parse_architecture(std::string_view text);

NetworkSpec make_network_spec(Architecture arch, Model model, std::size_t n_classes,
                              std::size_t circuit_depth = 4);

/// Class subset for a label count: 2 -> {S, T}, 5 -> all five.
/// Throws ConfigError("labels", ...) otherwise.
std::vector<std::string> label_subset(std::size_t labels);

std::vector<std::uint64_t> default_seeds(std::size_t count = 10);

struct ExperimentConfig {
  Model model = Model::kQccnn;
  Architecture arch = Architecture::kOneLayer;
  std::size_t labels = 2;
  std::size_t dataset_size = 1000;
  double train_fraction = 0.8;
  std::size_t circuit_depth = 4;
  std::vector<std::uint64_t> seeds = default_seeds();
  TrainConfig train{};

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

struct SeedResult {
  std::uint64_t seed = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::vector<MetricsRecord> metrics;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<SeedResult> runs;
  std::vector<MetricsRecord> mean;  // per-record average over seeds
};

/// Data for one seed: the full dataset is generated, split, and then
/// filtered to the label subset on both sides.
struct SeedData {
  Dataset train;
  Dataset test;
};
SeedData prepare_seed_data(const ExperimentConfig& config, std::uint64_t seed);

/// Network for one seed with seeded initial parameters.
Network make_seed_network(const ExperimentConfig& config, std::uint64_t seed);

SeedResult run_seed(const ExperimentConfig& config, std::uint64_t seed,
                    const MetricsCallback& on_record = {});

using ProgressCallback = std::function<void(std::uint64_t seed, const MetricsRecord&)>;

/// Trains one network per seed. Each seed fixes dataset generation, the
/// split, parameter initialisation and mini-batch order.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const ProgressCallback& progress = {});

/// Element-wise mean of per-seed metric series of equal length.
std::vector<MetricsRecord> average_metrics(const std::vector<SeedResult>& runs);

}  // namespace qccnn
