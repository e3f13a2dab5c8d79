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

#include "qccnn/layers.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qccnn/error.hpp"

namespace qccnn {
namespace {

void require_cache(const LayerCache& cache, const char* layer) {
  if (!cache.filled) {
    throw StateError(std::string(layer) + " backward called without a forward cache");
  }
}

void require_upstream(const Tensor& upstream, const Shape& expected, const char* layer) {
  if (upstream.shape() != expected) {
    throw ShapeError(std::string(layer) + " upstream gradient has shape " +
                     upstream.shape().to_string() + ", expected " + expected.to_string());
  }
}

double glorot_limit(std::size_t fan_in, std::size_t fan_out) {
  return std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
}

}  // namespace

// ---------------------------------------------------------------------------
// QuantumConvLayer

QuantumConvLayer::QuantumConvLayer(WindowSpec window, std::size_t filters,
                                   std::size_t circuit_depth, ShiftRule rule)
    : window_(window),
      filters_(filters),
      circuit_(build_circuit(window.cells(), circuit_depth)),
      rule_(rule),
      params_(filters * circuit_.param_count(), 0.0) {
  if (filters < 1) throw ShapeError("quantum conv needs at least one filter");
}

Shape QuantumConvLayer::output_shape(const Shape& input) const {
  return qccnn::output_shape(input, window_, filters_);
}

std::span<const double> QuantumConvLayer::filter_params(std::size_t filter) const {
  const std::size_t p = circuit_.param_count();
  return std::span(params_).subspan(filter * p, p);
}

void QuantumConvLayer::initialize(Rng& rng) {
  for (double& a : params_) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
}

Tensor QuantumConvLayer::forward(const Tensor& input, LayerCache& cache) const {
  const Shape out_shape = output_shape(input.shape());
  Tensor out(out_shape);
  FeatureEvaluator evaluator(circuit_, rule_);
  cache.windows = extract_windows(input, window_);
  for (std::size_t f = 0; f < filters_; ++f) {
    evaluator.set_params(filter_params(f));
    for (const Window& w : cache.windows) {
      out.at(w.out_y, w.out_x, w.channel * filters_ + f) = evaluator.value(w.values);
    }
  }
  cache.input = input;
  cache.filled = true;
  return out;
}

LayerGradients QuantumConvLayer::backward(const Tensor& upstream, const LayerCache& cache,
                                          bool want_input_grad) const {
  require_cache(cache, "quantum conv");
  require_upstream(upstream, output_shape(cache.input.shape()), "quantum conv");

  const std::size_t n_params = circuit_.param_count();
  LayerGradients grads;
  grads.params.assign(params_.size(), 0.0);
  if (want_input_grad) grads.input = Tensor(cache.input.shape());

  FeatureEvaluator evaluator(circuit_, rule_);
  std::vector<double> param_grad(n_params);
  std::vector<double> window_grad(want_input_grad ? circuit_.n_qubits() : 0);

  for (std::size_t f = 0; f < filters_; ++f) {
    evaluator.set_params(filter_params(f));
    for (const Window& w : cache.windows) {
      const double up = upstream.at(w.out_y, w.out_x, w.channel * filters_ + f);
      if (up == 0.0) continue;
      evaluator.value_and_gradients(w.values, param_grad, window_grad);
      double* dst = grads.params.data() + f * n_params;
      for (std::size_t p = 0; p < n_params; ++p) dst[p] += up * param_grad[p];
      if (want_input_grad) {
        auto in = grads.input.data();
        for (std::size_t i = 0; i < w.source.size(); ++i) {
          if (w.source[i] != kPadding) in[static_cast<std::size_t>(w.source[i])] += up * window_grad[i];
        }
      }
    }
  }
  return grads;
}

// ---------------------------------------------------------------------------
// ClassicalConvLayer

ClassicalConvLayer::ClassicalConvLayer(WindowSpec window, std::size_t filters, bool relu_after)
    : window_(window),
      filters_(filters),
      relu_after_(relu_after),
      weights_(filters * window.cells(), 0.0) {
  if (filters < 1) throw ShapeError("classical conv needs at least one filter");
}

Shape ClassicalConvLayer::output_shape(const Shape& input) const {
  return qccnn::output_shape(input, window_, filters_);
}

void ClassicalConvLayer::initialize(Rng& rng) {
  const std::size_t cells = window_.cells();
  const double limit = glorot_limit(cells, filters_ * cells);
  for (double& w : weights_) w = rng.uniform(-limit, limit);
}

Tensor ClassicalConvLayer::forward(const Tensor& input, LayerCache& cache) const {
  Tensor pre(output_shape(input.shape()));
  const std::size_t cells = window_.cells();
  cache.windows = extract_windows(input, window_);
  for (const Window& w : cache.windows) {
    for (std::size_t f = 0; f < filters_; ++f) {
      double sum = 0.0;
      for (std::size_t i = 0; i < cells; ++i) sum += w.values[i] * weights_[f * cells + i];
      pre.at(w.out_y, w.out_x, w.channel * filters_ + f) = sum;
    }
  }
  Tensor out = pre;
  if (relu_after_) {
    for (double& v : out.data()) v = v > 0.0 ? v : 0.0;
  }
  cache.input = input;
  cache.pre_activation = std::move(pre);
  cache.filled = true;
  return out;
}

LayerGradients ClassicalConvLayer::backward(const Tensor& upstream, const LayerCache& cache,
                                            bool want_input_grad) const {
  require_cache(cache, "classical conv");
  require_upstream(upstream, cache.pre_activation.shape(), "classical conv");

  const std::size_t cells = window_.cells();
  LayerGradients grads;
  grads.params.assign(weights_.size(), 0.0);
  if (want_input_grad) grads.input = Tensor(cache.input.shape());

  for (const Window& w : cache.windows) {
    for (std::size_t f = 0; f < filters_; ++f) {
      const std::size_t c_out = w.channel * filters_ + f;
      double up = upstream.at(w.out_y, w.out_x, c_out);
      // ReLU subgradient is 0 at 0.
      if (relu_after_ && !(cache.pre_activation.at(w.out_y, w.out_x, c_out) > 0.0)) up = 0.0;
      if (up == 0.0) continue;
      for (std::size_t i = 0; i < cells; ++i) {
        grads.params[f * cells + i] += up * w.values[i];
        if (want_input_grad && w.source[i] != kPadding) {
          grads.input.data()[static_cast<std::size_t>(w.source[i])] += up * weights_[f * cells + i];
        }
      }
    }
  }
  return grads;
}

// ---------------------------------------------------------------------------
// MaxPoolLayer

MaxPoolLayer::MaxPoolLayer(WindowSpec window) : window_(window) {}

Shape MaxPoolLayer::output_shape(const Shape& input) const {
  return qccnn::output_shape(input, window_, 1);
}

Tensor MaxPoolLayer::forward(const Tensor& input, LayerCache& cache) const {
  Tensor out(output_shape(input.shape()));
  const std::vector<Window> windows = extract_windows(input, window_);
  cache.argmax.assign(out.size(), kPadding);
  for (const Window& w : windows) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < w.values.size(); ++i) {
      if (w.values[i] > w.values[best]) best = i;
    }
    const std::size_t idx = out.index(w.out_y, w.out_x, w.channel);
    out.data()[idx] = w.values[best];
    cache.argmax[idx] = w.source[best];
  }
  cache.input = input;
  cache.filled = true;
  return out;
}

LayerGradients MaxPoolLayer::backward(const Tensor& upstream, const LayerCache& cache,
                                      bool want_input_grad) const {
  require_cache(cache, "max pool");
  require_upstream(upstream, output_shape(cache.input.shape()), "max pool");
  LayerGradients grads;
  if (!want_input_grad) return grads;
  grads.input = Tensor(cache.input.shape());
  for (std::size_t o = 0; o < upstream.size(); ++o) {
    const std::ptrdiff_t src = cache.argmax[o];
    if (src != kPadding) grads.input.data()[static_cast<std::size_t>(src)] += upstream.data()[o];
  }
  return grads;
}

// ---------------------------------------------------------------------------
// DenseLayer

DenseLayer::DenseLayer(std::size_t in_dim, std::size_t out_dim)
    : in_dim_(in_dim), out_dim_(out_dim), params_(in_dim * out_dim + out_dim, 0.0) {
  if (in_dim < 1 || out_dim < 1) throw ShapeError("dense layer dimensions must be positive");
}

Shape DenseLayer::output_shape(const Shape& input) const {
  if (input.size() != in_dim_) {
    throw ShapeError("dense layer expects " + std::to_string(in_dim_) + " inputs, got shape " +
                     input.to_string());
  }
  return Shape{1, 1, out_dim_};
}

void DenseLayer::initialize(Rng& rng) {
  const double limit = glorot_limit(in_dim_, out_dim_);
  for (double& w : weights()) w = rng.uniform(-limit, limit);
  for (double& b : bias()) b = 0.0;
}

Tensor DenseLayer::forward(const Tensor& input, LayerCache& cache) const {
  Tensor out(output_shape(input.shape()));
  const auto x = input.data();
  for (std::size_t o = 0; o < out_dim_; ++o) {
    double sum = params_[in_dim_ * out_dim_ + o];
    const double* row = params_.data() + o * in_dim_;
    for (std::size_t i = 0; i < in_dim_; ++i) sum += row[i] * x[i];
    out.data()[o] = sum;
  }
  cache.input = input;
  cache.filled = true;
  return out;
}

LayerGradients DenseLayer::backward(const Tensor& upstream, const LayerCache& cache,
                                    bool want_input_grad) const {
  require_cache(cache, "dense");
  require_upstream(upstream, Shape{1, 1, out_dim_}, "dense");
  const auto x = cache.input.data();
  const auto up = upstream.data();
  LayerGradients grads;
  grads.params.assign(params_.size(), 0.0);
  for (std::size_t o = 0; o < out_dim_; ++o) {
    for (std::size_t i = 0; i < in_dim_; ++i) grads.params[o * in_dim_ + i] = up[o] * x[i];
    grads.params[in_dim_ * out_dim_ + o] = up[o];
  }
  if (want_input_grad) {
    grads.input = Tensor(cache.input.shape());
    auto dx = grads.input.data();
    for (std::size_t o = 0; o < out_dim_; ++o) {
      const double* row = params_.data() + o * in_dim_;
      for (std::size_t i = 0; i < in_dim_; ++i) dx[i] += row[i] * up[o];
    }
  }
  return grads;
}

// ---------------------------------------------------------------------------

LossValue mse_loss(std::span<const double> pred, std::span<const double> target) {
  if (pred.size() != target.size() || pred.empty()) {
    throw ShapeError("mse_loss needs equal, non-empty lengths; got " + std::to_string(pred.size()) +
                     " and " + std::to_string(target.size()));
  }
  const double n = static_cast<double>(pred.size());
  LossValue out;
  out.grad.resize(pred.size());
  for (std::size_t c = 0; c < pred.size(); ++c) {
    const double diff = pred[c] - target[c];
    out.loss += diff * diff;
    out.grad[c] = 2.0 * diff / n;
  }
  out.loss /= n;
  return out;
}

}  // namespace qccnn
