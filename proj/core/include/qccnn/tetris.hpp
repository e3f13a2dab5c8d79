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
 * Procedural 3x3 Tetris-brick image dataset.
 *
 * Five classes, in label order S, L, O, T, I. S pools the S and Z
 * tetrominoes, L pools L and J, I is the three-cell line (a four-cell line
 * does not fit the grid). Placing every orientation at every offset inside
 * the grid gives 8, 16, 4, 8 and 6 distinct masks.
 *
 * Foreground pixels are uniform on [0.7, 1), background on [0, 0.1).
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qccnn/tensor.hpp"

namespace qccnn {

inline constexpr std::size_t kGridSize = 3;
inline constexpr std::array<std::string_view, 5> kBrickNames{"S", "L", "O", "T", "I"};

inline constexpr double kForegroundLow = 0.7;
inline constexpr double kForegroundHigh = 1.0;
inline constexpr double kBackgroundLow = 0.0;
inline constexpr double kBackgroundHigh = 0.1;

/// 3x3 binary mask; bit (row * 3 + col) is set for foreground cells.
using Mask = std::uint16_t;

/// Label index of a brick name. Throws DomainError for unknown names.
std::size_t brick_index(std::string_view name);

/// Every placement of the class inside the grid, sorted by mask value.
std::vector<Mask> enumerate_configurations(std::string_view class_name);

std::string mask_to_string(Mask mask);

enum class SplitTag { kFull, kTrain, kTest };

std::string to_string(SplitTag tag);
SplitTag parse_split_tag(std::string_view text);

struct Sample {
  Tensor image;  // 3x3x1
  std::size_t label = 0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Dataset {
  std::vector<Sample> samples;
  std::vector<std::string> class_names;
  SplitTag split = SplitTag::kFull;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return samples.size(); }
  /// Number of samples per label.
  std::vector<std::size_t> label_counts() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// `n` samples: label uniform over the five classes, configuration uniform
/// within the class, then the nine pixels in row-major order.
Dataset generate_dataset(std::size_t n, std::uint64_t seed);

/// Seeded Fisher-Yates permutation; the first floor(fraction * n) permuted
/// samples form the training set. Throws DomainError if either side would
/// be empty or the fraction is outside (0, 1).
std::pair<Dataset, Dataset> split(const Dataset& dataset, double train_fraction,
                                  std::uint64_t seed);

/// Keeps samples whose class is in `names` and relabels them densely in the
/// order given.
Dataset filter_labels(const Dataset& dataset, std::span<const std::string> names);

// JSON-lines file: a header object
//   {"format":"qccnn-tetris","version":1,"class_names":[...],"seed":N,
//    "split":"full|train|test","count":n}
// followed by `count` records {"label":int,"pixels":[9 floats, row-major]}.
void write_dataset(const Dataset& dataset, std::ostream& out);
Dataset read_dataset(std::istream& in);
void save_dataset(const Dataset& dataset, const std::filesystem::path& path);
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace qccnn
