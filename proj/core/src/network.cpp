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

#include "qccnn/network.hpp"

#include <algorithm>

#include "qccnn/error.hpp"

namespace qccnn {

std::string to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::kQuantumConv:
      return "quantum_conv";
    case LayerKind::kClassicalConv:
      return "classical_conv";
    case LayerKind::kMaxPool:
      return "max_pool";
    case LayerKind::kDense:
      return "dense";
  }
  return "unknown";
}

LayerSpec LayerSpec::quantum_conv(WindowSpec window, std::size_t filters, std::size_t depth) {
  LayerSpec s;
  s.kind = LayerKind::kQuantumConv;
  s.window = window;
  s.filters = filters;
  s.circuit_depth = depth;
  return s;
}

LayerSpec LayerSpec::classical_conv(WindowSpec window, std::size_t filters, bool relu) {
  LayerSpec s;
  s.kind = LayerKind::kClassicalConv;
  s.window = window;
  s.filters = filters;
  s.relu_after = relu;
  return s;
}

LayerSpec LayerSpec::max_pool(WindowSpec window) {
  LayerSpec s;
  s.kind = LayerKind::kMaxPool;
  s.window = window;
  return s;
}

LayerSpec LayerSpec::dense(std::size_t out_dim) {
  LayerSpec s;
  s.kind = LayerKind::kDense;
  s.out_dim = out_dim;
  return s;
}

Network::Network(NetworkSpec spec) : spec_(std::move(spec)) {
  if (spec_.layers.empty()) throw ShapeError("network has no layers");
  if (spec_.input.size() == 0) throw ShapeError("network input shape is empty");
  const LayerSpec& last = spec_.layers.back();
  if (last.kind != LayerKind::kDense || last.out_dim != spec_.n_classes) {
    throw ShapeError("final layer must be dense with " + std::to_string(spec_.n_classes) +
                     " outputs");
  }

  shapes_.push_back(spec_.input);
  for (const LayerSpec& ls : spec_.layers) {
    const Shape& in = shapes_.back();
    switch (ls.kind) {
      case LayerKind::kQuantumConv:
        layers_.emplace_back(QuantumConvLayer(ls.window, ls.filters, ls.circuit_depth));
        break;
      case LayerKind::kClassicalConv:
        layers_.emplace_back(ClassicalConvLayer(ls.window, ls.filters, ls.relu_after));
        break;
      case LayerKind::kMaxPool:
        layers_.emplace_back(MaxPoolLayer(ls.window));
        break;
      case LayerKind::kDense:
        layers_.emplace_back(DenseLayer(in.size(), ls.out_dim));
        break;
    }
    shapes_.push_back(std::visit([&](const auto& layer) { return layer.output_shape(in); },
                                 layers_.back()));
  }
}

void Network::initialize(Rng& rng) {
  for (Layer& layer : layers_) std::visit([&](auto& l) { l.initialize(rng); }, layer);
}

std::size_t Network::param_count() const noexcept {
  std::size_t n = 0;
  for (const Layer& layer : layers_) {
    n += std::visit([](const auto& l) { return l.params().size(); }, layer);
  }
  return n;
}

std::vector<double> Network::parameters() const {
  std::vector<double> flat;
  flat.reserve(param_count());
  for (const Layer& layer : layers_) {
    std::visit([&](const auto& l) { flat.insert(flat.end(), l.params().begin(), l.params().end()); },
               layer);
  }
  return flat;
}

void Network::set_parameters(std::span<const double> flat) {
  if (flat.size() != param_count()) {
    throw ShapeError("expected " + std::to_string(param_count()) + " parameters, got " +
                     std::to_string(flat.size()));
  }
  std::size_t offset = 0;
  for (Layer& layer : layers_) {
    std::visit(
        [&](auto& l) {
          auto dst = l.params();
          std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(offset), dst.size(), dst.begin());
          offset += dst.size();
        },
        layer);
  }
}

std::vector<double> Network::forward(const Tensor& input, NetworkContext& ctx) const {
  if (input.shape() != spec_.input) {
    throw ShapeError("network input has shape " + input.shape().to_string() + ", expected " +
                     spec_.input.to_string());
  }
  ctx.caches.assign(layers_.size(), LayerCache{});
  Tensor x = input;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    x = std::visit([&](const auto& l) { return l.forward(x, ctx.caches[i]); }, layers_[i]);
  }
  return x.values();
}

std::vector<double> Network::backward(const NetworkContext& ctx,
                                      std::span<const double> loss_grad) const {
  if (ctx.caches.size() != layers_.size()) {
    throw StateError("network backward called without a matching forward pass");
  }
  if (loss_grad.size() != spec_.n_classes) {
    throw ShapeError("loss gradient has length " + std::to_string(loss_grad.size()) +
                     ", expected " + std::to_string(spec_.n_classes));
  }

  std::vector<std::size_t> offsets(layers_.size() + 1, 0);
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    offsets[i + 1] =
        offsets[i] + std::visit([](const auto& l) { return l.params().size(); }, layers_[i]);
  }
  std::vector<double> flat(offsets.back(), 0.0);

  Tensor upstream(shapes_.back(), std::vector<double>(loss_grad.begin(), loss_grad.end()));
  for (std::size_t i = layers_.size(); i-- > 0;) {
    // The network input is data, so the first layer never needs an input gradient.
    const bool want_input = i > 0;
    LayerGradients g = std::visit(
        [&](const auto& l) { return l.backward(upstream, ctx.caches[i], want_input); }, layers_[i]);
    std::copy(g.params.begin(), g.params.end(),
              flat.begin() + static_cast<std::ptrdiff_t>(offsets[i]));
    if (want_input) upstream = std::move(g.input);
  }
  return flat;
}

std::vector<double> Network::predict(const Tensor& input) const {
  NetworkContext ctx;
  return forward(input, ctx);
}

std::size_t argmax(std::span<const double> values) {
  if (values.empty()) throw ShapeError("argmax of an empty vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

std::vector<double> one_hot(std::size_t label, std::size_t n_classes) {
  if (label >= n_classes) {
    throw IndexError("label " + std::to_string(label) + " out of range for " +
                     std::to_string(n_classes) + " classes");
  }
  std::vector<double> v(n_classes, 0.0);
  v[label] = 1.0;
  return v;
}

}  // namespace qccnn
