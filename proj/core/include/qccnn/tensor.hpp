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
 * Real-valued tensors and sliding-window arithmetic shared by every layer.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qccnn {

struct Shape {
  std::size_t height = 0;
  std::size_t width = 0;
  std::size_t channels = 0;

  std::size_t size() const noexcept { return height * width * channels; }
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Dense (height x width x channels) array, row-major with the channel index
/// varying fastest: element (y, x, c) lives at (y * width + x) * channels + c.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  /// Throws ShapeError unless data.size() == shape.size().
  Tensor(Shape shape, std::vector<double> data);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::size_t index(std::size_t y, std::size_t x, std::size_t c) const noexcept {
    return (y * shape_.width + x) * shape_.channels + c;
  }
  double& at(std::size_t y, std::size_t x, std::size_t c) { return data_[index(y, x, c)]; }
  double at(std::size_t y, std::size_t x, std::size_t c) const { return data_[index(y, x, c)]; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }
  const std::vector<double>& values() const noexcept { return data_; }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Shape shape_;
  std::vector<double> data_;
};

/// Sliding window geometry. Padding adds `padding` rows/columns of zeros on
/// all four edges.
struct WindowSpec {
  std::size_t window_h = 2;
  std::size_t window_w = 2;
  std::size_t stride = 1;
  std::size_t padding = 0;

  std::size_t cells() const noexcept { return window_h * window_w; }

  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

/// ((v + 2p - m)/s + 1, (h + 2p - n)/s + 1, d * filters). Throws ShapeError
/// when the window does not fit or the stride does not divide evenly.
Shape output_shape(const Shape& input, const WindowSpec& spec, std::size_t filters = 1);

/// Position of a window cell in the source tensor's flat data, or kPadding.
inline constexpr std::ptrdiff_t kPadding = -1;

struct Window {
  std::size_t out_y = 0;
  std::size_t out_x = 0;
  std::size_t channel = 0;
  std::vector<double> values;          // row-major, window_h * window_w
  std::vector<std::ptrdiff_t> source;  // flat input index per value, or kPadding

  friend bool operator==(const Window&, const Window&) = default;
};

/// Enumerates windows channel by channel; within a channel left to right,
/// then top to bottom. Padded cells carry 0.0 and source kPadding.
std::vector<Window> extract_windows(const Tensor& input, const WindowSpec& spec);

}  // namespace qccnn
