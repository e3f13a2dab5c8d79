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

#include "qccnn/trainer.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qccnn/error.hpp"
#include "qccnn/parallel.hpp"
#include "qccnn/random.hpp"

namespace qccnn {
namespace {

void check_classes(const Network& net, const Dataset& dataset) {
  if (dataset.class_names.size() != net.spec().n_classes) {
    throw ShapeError("dataset has " + std::to_string(dataset.class_names.size()) +
                     " classes, network predicts " + std::to_string(net.spec().n_classes));
  }
}

}  // namespace

void TrainConfig::validate() const {
  if (iterations < 1) throw ConfigError("iterations", "must be at least 1");
  if (!(adam.lr > 0.0) || !std::isfinite(adam.lr)) throw ConfigError("lr", "must be positive");
  if (!(adam.beta1 >= 0.0 && adam.beta1 < 1.0)) throw ConfigError("beta1", "must lie in [0, 1)");
  if (!(adam.beta2 >= 0.0 && adam.beta2 < 1.0)) throw ConfigError("beta2", "must lie in [0, 1)");
  if (!(adam.epsilon > 0.0)) throw ConfigError("epsilon", "must be positive");
  if (eval_every < 1) throw ConfigError("eval_every", "must be at least 1");
}

Evaluation evaluate(const Network& net, const Dataset& dataset) {
  if (dataset.size() == 0) throw DomainError("cannot evaluate on an empty dataset");
  check_classes(net, dataset);
  const std::size_t n = dataset.size();
  const std::size_t n_classes = net.spec().n_classes;
  std::vector<double> losses(n);
  std::vector<char> hits(n);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Sample& s = dataset.samples[i];
      const std::vector<double> pred = net.predict(s.image);
      losses[i] = mse_loss(pred, one_hot(s.label, n_classes)).loss;
      hits[i] = argmax(pred) == s.label ? 1 : 0;
    }
  });
  Evaluation ev;
  ev.total = n;
  for (std::size_t i = 0; i < n; ++i) {
    ev.correct += static_cast<std::size_t>(hits[i]);
    ev.mean_loss += losses[i];
  }
  ev.mean_loss /= static_cast<double>(n);
  ev.accuracy = static_cast<double>(ev.correct) / static_cast<double>(n);
  return ev;
}

BatchGradient batch_gradient(const Network& net, const Dataset& dataset,
                             const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw DomainError("empty batch");
  const std::size_t n_classes = net.spec().n_classes;
  const std::size_t n = indices.size();
  std::vector<double> losses(n);
  std::vector<std::vector<double>> grads(n);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    NetworkContext ctx;
    for (std::size_t k = begin; k < end; ++k) {
      const Sample& s = dataset.samples.at(indices[k]);
      const std::vector<double> pred = net.forward(s.image, ctx);
      const LossValue lv = mse_loss(pred, one_hot(s.label, n_classes));
      losses[k] = lv.loss;
      grads[k] = net.backward(ctx, lv.grad);
    }
  });
  BatchGradient out;
  out.grad.assign(net.param_count(), 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    out.loss += losses[k];
    for (std::size_t p = 0; p < out.grad.size(); ++p) out.grad[p] += grads[k][p];
  }
  const double scale = 1.0 / static_cast<double>(n);
  out.loss *= scale;
  for (double& g : out.grad) g *= scale;
  return out;
}

std::vector<MetricsRecord> train(Network& net, const Dataset& train_set, const Dataset& test_set,
                                 const TrainConfig& config, const MetricsCallback& on_record) {
  config.validate();
  if (train_set.size() == 0) throw DomainError("empty training set");
  if (test_set.size() == 0) throw DomainError("empty test set");
  check_classes(net, train_set);
  check_classes(net, test_set);

  const std::size_t n = train_set.size();
  const bool full_batch = config.batch_size == 0 || config.batch_size >= n;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng shuffle_rng(config.shuffle_seed);
  std::size_t cursor = n;

  std::vector<double> params = net.parameters();
  AdamState adam(params.size(), config.adam);
  std::vector<MetricsRecord> records;
  records.reserve(config.iterations / config.eval_every);

  std::vector<std::size_t> batch;
  for (std::size_t it = 1; it <= config.iterations; ++it) {
    if (full_batch) {
      batch = order;
    } else {
      batch.clear();
      while (batch.size() < config.batch_size) {
        if (cursor == n) {
          for (std::size_t i = n - 1; i > 0; --i) {
            std::swap(order[i], order[shuffle_rng.uniform_index(i + 1)]);
          }
          cursor = 0;
        }
        batch.push_back(order[cursor++]);
      }
    }

    const BatchGradient bg = batch_gradient(net, train_set, batch);
    if (!std::isfinite(bg.loss)) {
      throw DivergenceError("non-finite training loss at iteration " + std::to_string(it));
    }
    adam_step(params, bg.grad, adam);
    net.set_parameters(params);

    if (it % config.eval_every == 0) {
      const Evaluation ev = evaluate(net, test_set);
      if (!std::isfinite(ev.mean_loss)) {
        throw DivergenceError("non-finite test loss at iteration " + std::to_string(it));
      }
      MetricsRecord rec{it, bg.loss, ev.mean_loss, ev.accuracy};
      records.push_back(rec);
      if (on_record) on_record(rec);
    }
  }
  return records;
}

}  // namespace qccnn
