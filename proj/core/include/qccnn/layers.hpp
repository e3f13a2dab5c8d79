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
 * Differentiable layers. Each layer owns its trainable parameters and is
 * const during forward/backward; per-sample activations live in a
 * LayerCache supplied by the caller, so one layer can serve many samples
 * concurrently.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qccnn/pqc.hpp"
#include "qccnn/random.hpp"
#include "qccnn/tensor.hpp"

namespace qccnn {

/// Activations recorded by a forward pass for use by the matching backward.
struct LayerCache {
  bool filled = false;
  Tensor input;
  std::vector<Window> windows;
  Tensor pre_activation;              // classical conv only
  std::vector<std::ptrdiff_t> argmax;  // max pool only; may hold kPadding
};

struct LayerGradients {
  std::vector<double> params;  // same layout as the layer's params()
  Tensor input;                // empty unless the input gradient was requested
};

/**
 * Quantum convolution: every filter is a FeatureEvaluator circuit over an
 * m x n window (N = m * n qubits). Filters act on each input channel
 * independently, so d input channels and k filters give d * k output
 * channels; output channel c * k + f holds filter f applied to channel c.
 * Parameters are stored filter-major, param_count() angles per filter.
 */
class QuantumConvLayer {
 public:
  QuantumConvLayer(WindowSpec window, std::size_t filters, std::size_t circuit_depth,
                   ShiftRule rule = kExactShiftRule);

  const WindowSpec& window() const noexcept { return window_; }
  std::size_t filters() const noexcept { return filters_; }
  const CircuitSpec& circuit() const noexcept { return circuit_; }
  Shape output_shape(const Shape& input) const;

  std::span<double> params() noexcept { return params_; }
  std::span<const double> params() const noexcept { return params_; }
  std::span<const double> filter_params(std::size_t filter) const;

  /// Angles uniform on [0, 2pi).
  void initialize(Rng& rng);

  Tensor forward(const Tensor& input, LayerCache& cache) const;
  /// Accumulates upstream * shift-rule gradient over all windows. Windows
  /// with zero upstream gradient are skipped.
  LayerGradients backward(const Tensor& upstream, const LayerCache& cache,
                          bool want_input_grad) const;

 private:
  WindowSpec window_;
  std::size_t filters_;
  CircuitSpec circuit_;
  ShiftRule rule_;
  std::vector<double> params_;
};

/// Classical convolution: each output cell is sum_ij A_ij P_ij with no bias,
/// optionally followed by ReLU. Channel layout matches QuantumConvLayer.
class ClassicalConvLayer {
 public:
  ClassicalConvLayer(WindowSpec window, std::size_t filters, bool relu_after);

  const WindowSpec& window() const noexcept { return window_; }
  std::size_t filters() const noexcept { return filters_; }
  bool relu_after() const noexcept { return relu_after_; }
  Shape output_shape(const Shape& input) const;

  std::span<double> params() noexcept { return weights_; }
  std::span<const double> params() const noexcept { return weights_; }

  /// Glorot-uniform with fan_in = m*n and fan_out = k*m*n.
  void initialize(Rng& rng);

  Tensor forward(const Tensor& input, LayerCache& cache) const;
  LayerGradients backward(const Tensor& upstream, const LayerCache& cache,
                          bool want_input_grad) const;

 private:
  WindowSpec window_;
  std::size_t filters_;
  bool relu_after_;
  std::vector<double> weights_;  // filter-major, row-major within a filter
};

/// Per-channel max over each window. Ties go to the first cell in row-major
/// order; padded cells take part with value 0.
class MaxPoolLayer {
 public:
  explicit MaxPoolLayer(WindowSpec window);

  const WindowSpec& window() const noexcept { return window_; }
  Shape output_shape(const Shape& input) const;

  std::span<double> params() noexcept { return {}; }
  std::span<const double> params() const noexcept { return {}; }
  void initialize(Rng&) {}

  Tensor forward(const Tensor& input, LayerCache& cache) const;
  LayerGradients backward(const Tensor& upstream, const LayerCache& cache,
                          bool want_input_grad) const;

 private:
  WindowSpec window_;
};

/// Fully connected y = W x + b on the flattened input; output shape 1x1xout.
/// Parameters: W row-major (out x in), then b.
class DenseLayer {
 public:
  DenseLayer(std::size_t in_dim, std::size_t out_dim);

  std::size_t in_dim() const noexcept { return in_dim_; }
  std::size_t out_dim() const noexcept { return out_dim_; }
  Shape output_shape(const Shape& input) const;

  std::span<double> params() noexcept { return params_; }
  std::span<const double> params() const noexcept { return params_; }
  std::span<double> weights() noexcept { return std::span(params_).first(in_dim_ * out_dim_); }
  std::span<double> bias() noexcept { return std::span(params_).last(out_dim_); }

  /// Glorot-uniform weights, zero bias.
  void initialize(Rng& rng);

  Tensor forward(const Tensor& input, LayerCache& cache) const;
  LayerGradients backward(const Tensor& upstream, const LayerCache& cache,
                          bool want_input_grad) const;

 private:
  std::size_t in_dim_;
  std::size_t out_dim_;
  std::vector<double> params_;
};

struct LossValue {
  double loss = 0.0;
  std::vector<double> grad;
};

/// (1/C) sum_c (pred_c - target_c)^2 and its gradient (2/C)(pred - target).
LossValue mse_loss(std::span<const double> pred, std::span<const double> target);

}  // namespace qccnn
