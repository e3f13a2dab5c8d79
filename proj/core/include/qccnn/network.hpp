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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qccnn/layers.hpp"
#include "qccnn/random.hpp"
#include "qccnn/tensor.hpp"

namespace qccnn {

enum class LayerKind { kQuantumConv, kClassicalConv, kMaxPool, kDense };

std::string to_string(LayerKind kind);

struct LayerSpec {
  LayerKind kind = LayerKind::kDense;
  WindowSpec window{};
  std::size_t filters = 1;        // conv layers
  std::size_t circuit_depth = 0;  // quantum conv
  std::size_t out_dim = 0;        // dense
  bool relu_after = false;        // classical conv

  static LayerSpec quantum_conv(WindowSpec window, std::size_t filters, std::size_t depth);
  static LayerSpec classical_conv(WindowSpec window, std::size_t filters, bool relu = true);
  static LayerSpec max_pool(WindowSpec window);
  static LayerSpec dense(std::size_t out_dim);

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

/// Ordered layers from an input shape to n_classes outputs, trained with MSE
/// against one-hot targets. The last layer must be dense with out_dim equal
/// to n_classes.
struct NetworkSpec {
  Shape input;
  std::vector<LayerSpec> layers;
  std::size_t n_classes = 0;
};

using Layer = std::variant<QuantumConvLayer, ClassicalConvLayer, MaxPoolLayer, DenseLayer>;

/// Per-sample activations. One context per concurrently evaluated sample.
struct NetworkContext {
  std::vector<LayerCache> caches;
};

class Network {
 public:
  /// Validates the shape chain and allocates zero parameters. Throws
  /// ShapeError if consecutive shapes do not chain.
  explicit Network(NetworkSpec spec);

  /// Seeded initialisation, layer by layer in order.
  void initialize(Rng& rng);

  const NetworkSpec& spec() const noexcept { return spec_; }
  /// shapes()[0] is the input shape; shapes()[i + 1] is layer i's output.
  std::span<const Shape> shapes() const noexcept { return shapes_; }
  std::span<const Layer> layers() const noexcept { return layers_; }
  std::span<Layer> layers() noexcept { return layers_; }

  /// Flat parameter vector: layers in order, each in its own params() layout.
  std::size_t param_count() const noexcept;
  std::vector<double> parameters() const;
  void set_parameters(std::span<const double> flat);

  std::vector<double> forward(const Tensor& input, NetworkContext& ctx) const;
  /// Gradient of the loss w.r.t. every parameter, in parameters() order.
  std::vector<double> backward(const NetworkContext& ctx, std::span<const double> loss_grad) const;

  std::vector<double> predict(const Tensor& input) const;

 private:
  NetworkSpec spec_;
  std::vector<Shape> shapes_;
  std::vector<Layer> layers_;
};

/// Index of the largest output; ties resolve to the lowest index.
std::size_t argmax(std::span<const double> values);

/// One-hot vector of length n_classes.
std::vector<double> one_hot(std::size_t label, std::size_t n_classes);

}  // namespace qccnn
