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

#include "qccnn/tensor.hpp"

#include "qccnn/error.hpp"

namespace qccnn {
namespace {

std::size_t slide_count(std::size_t extent, std::size_t window, const WindowSpec& spec,
                        const char* axis) {
  const std::size_t padded = extent + 2 * spec.padding;
  if (window > padded) {
    throw ShapeError(std::string("window larger than padded ") + axis);
  }
  if ((padded - window) % spec.stride != 0) {
    throw ShapeError(std::string("stride does not divide the ") + axis + " evenly");
  }
  return (padded - window) / spec.stride + 1;
}

}  // namespace

std::string Shape::to_string() const {
  return std::to_string(height) + "x" + std::to_string(width) + "x" + std::to_string(channels);
}

Tensor::Tensor(Shape shape, double fill) : shape_(shape), data_(shape.size(), fill) {}

Tensor::Tensor(Shape shape, std::vector<double> data) : shape_(shape), data_(std::move(data)) {
  if (data_.size() != shape_.size()) {
    throw ShapeError("tensor data of length " + std::to_string(data_.size()) +
                     " does not match shape " + shape_.to_string());
  }
}

Shape output_shape(const Shape& input, const WindowSpec& spec, std::size_t filters) {
  if (spec.window_h < 1 || spec.window_w < 1 || spec.stride < 1) {
    throw ShapeError("window dimensions and stride must be at least 1");
  }
  if (filters < 1) throw ShapeError("filter count must be at least 1");
  if (input.size() == 0) throw ShapeError("empty input shape");
  return Shape{slide_count(input.height, spec.window_h, spec, "height"),
               slide_count(input.width, spec.window_w, spec, "width"),
               input.channels * filters};
}

std::vector<Window> extract_windows(const Tensor& input, const WindowSpec& spec) {
  const Shape& in = input.shape();
  const Shape out = output_shape(in, spec);
  const auto pad = static_cast<std::ptrdiff_t>(spec.padding);

  std::vector<Window> windows;
  windows.reserve(out.size());
  for (std::size_t c = 0; c < in.channels; ++c) {
    for (std::size_t oy = 0; oy < out.height; ++oy) {
      for (std::size_t ox = 0; ox < out.width; ++ox) {
        Window w{oy, ox, c, {}, {}};
        w.values.reserve(spec.cells());
        w.source.reserve(spec.cells());
        for (std::size_t i = 0; i < spec.window_h; ++i) {
          for (std::size_t j = 0; j < spec.window_w; ++j) {
            const auto y = static_cast<std::ptrdiff_t>(oy * spec.stride + i) - pad;
            const auto x = static_cast<std::ptrdiff_t>(ox * spec.stride + j) - pad;
            if (y < 0 || x < 0 || y >= static_cast<std::ptrdiff_t>(in.height) ||
                x >= static_cast<std::ptrdiff_t>(in.width)) {
              w.values.push_back(0.0);
              w.source.push_back(kPadding);
            } else {
              const std::size_t idx = input.index(static_cast<std::size_t>(y),
                                                  static_cast<std::size_t>(x), c);
              w.values.push_back(input.data()[idx]);
              w.source.push_back(static_cast<std::ptrdiff_t>(idx));
            }
          }
        }
        windows.push_back(std::move(w));
      }
    }
  }
  return windows;
}

}  // namespace qccnn
