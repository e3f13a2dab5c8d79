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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qccnn/adam.hpp"
#include "qccnn/network.hpp"
#include "qccnn/tetris.hpp"

namespace qccnn {

struct TrainConfig {
  std::size_t iterations = 1000;
  AdamHyper adam{};
  /// 0 trains on the full batch every iteration.
  std::size_t batch_size = 0;
  std::size_t eval_every = 10;
  /// Seeds the mini-batch shuffle; unused in full-batch mode.
  std::uint64_t shuffle_seed = 0;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// train_loss is the mean loss of the batch used at `iteration`, measured
/// before that iteration's update. Test metrics are measured after it.
struct MetricsRecord {
  std::size_t iteration = 0;
  double train_loss = 0.0;
  double test_loss = 0.0;
  double test_accuracy = 0.0;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

struct Evaluation {
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy = 0.0;  // correct / total
  double mean_loss = 0.0;
};

/// Accuracy of argmax(prediction) against the labels and mean MSE against
/// one-hot targets. Throws DomainError for an empty dataset.
Evaluation evaluate(const Network& net, const Dataset& dataset);

/// Mean loss and mean gradient over `indices` of `dataset`. Per-sample work
/// runs in parallel; the reduction runs in index order.
struct BatchGradient {
  double loss = 0.0;
  std::vector<double> grad;
};
BatchGradient batch_gradient(const Network& net, const Dataset& dataset,
                             const std::vector<std::size_t>& indices);

using MetricsCallback = std::function<void(const MetricsRecord&)>;

/// ADAM training over all network parameters jointly. Records metrics every
/// `eval_every` iterations. Throws DivergenceError on a non-finite loss.
std::vector<MetricsRecord> train(Network& net, const Dataset& train_set, const Dataset& test_set,
                                 const TrainConfig& config, const MetricsCallback& on_record = {});

}  // namespace qccnn
