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

#include "qccnn/tetris.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include <json.hpp>

#include "qccnn/error.hpp"
#include "qccnn/random.hpp"

namespace qccnn {
namespace {

using Cell = std::pair<int, int>;
using json = nlohmann::json;

std::vector<Cell> base_cells(std::size_t label) {
  switch (label) {
    case 0:  // S
      return {{0, 1}, {0, 2}, {1, 0}, {1, 1}};
    case 1:  // L
      return {{0, 0}, {1, 0}, {2, 0}, {2, 1}};
    case 2:  // O
      return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    case 3:  // T
      return {{0, 0}, {0, 1}, {0, 2}, {1, 1}};
    default:  // I
      return {{0, 0}, {0, 1}, {0, 2}};
  }
}

// Shift so the minimum row and column are zero.
std::vector<Cell> normalized(std::vector<Cell> cells) {
  int min_r = cells[0].first;
  int min_c = cells[0].second;
  for (const auto& [r, c] : cells) {
    min_r = std::min(min_r, r);
    min_c = std::min(min_c, c);
  }
  for (auto& [r, c] : cells) {
    r -= min_r;
    c -= min_c;
  }
  return cells;
}

std::vector<std::vector<Cell>> orientations(const std::vector<Cell>& base) {
  std::vector<std::vector<Cell>> out;
  std::vector<Cell> cur = base;
  for (int mirror = 0; mirror < 2; ++mirror) {
    for (int rot = 0; rot < 4; ++rot) {
      out.push_back(normalized(cur));
      for (auto& [r, c] : cur) std::tie(r, c) = Cell{c, -r};
    }
    for (auto& cell : cur) cell.second = -cell.second;
  }
  return out;
}

constexpr std::uint64_t kFormatVersion = 1;
constexpr const char* kFormatName = "qccnn-tetris";

void validate_pixel(double p, std::size_t line) {
  const bool background = p >= kBackgroundLow && p <= kBackgroundHigh;
  const bool foreground = p >= kForegroundLow && p <= kForegroundHigh;
  if (!background && !foreground) {
    throw ValidationError("line " + std::to_string(line) + ": pixel value " + std::to_string(p) +
                          " outside [0, 0.1] and [0.7, 1]");
  }
}

}  // namespace

std::size_t brick_index(std::string_view name) {
  for (std::size_t i = 0; i < kBrickNames.size(); ++i) {
    if (kBrickNames[i] == name) return i;
  }
  throw DomainError("unknown brick class '" + std::string(name) + "'");
}

std::vector<Mask> enumerate_configurations(std::string_view class_name) {
  const std::size_t label = brick_index(class_name);
  std::set<Mask> masks;
  for (const auto& shape : orientations(base_cells(label))) {
    int h = 0;
    int w = 0;
    for (const auto& [r, c] : shape) {
      h = std::max(h, r + 1);
      w = std::max(w, c + 1);
    }
    const int grid = static_cast<int>(kGridSize);
    for (int dr = 0; dr + h <= grid; ++dr) {
      for (int dc = 0; dc + w <= grid; ++dc) {
        Mask m = 0;
        for (const auto& [r, c] : shape) m |= Mask(1u << ((r + dr) * grid + (c + dc)));
        masks.insert(m);
      }
    }
  }
  return {masks.begin(), masks.end()};
}

std::string mask_to_string(Mask mask) {
  std::string s;
  for (std::size_t r = 0; r < kGridSize; ++r) {
    for (std::size_t c = 0; c < kGridSize; ++c) s += (mask >> (r * kGridSize + c)) & 1u ? '#' : '.';
    if (r + 1 < kGridSize) s += '\n';
  }
  return s;
}

std::string to_string(SplitTag tag) {
  switch (tag) {
    case SplitTag::kFull:
      return "full";
    case SplitTag::kTrain:
      return "train";
    case SplitTag::kTest:
      return "test";
  }
  return "full";
}

SplitTag parse_split_tag(std::string_view text) {
  if (text == "full") return SplitTag::kFull;
  if (text == "train") return SplitTag::kTrain;
  if (text == "test") return SplitTag::kTest;
  throw DomainError("unknown split tag '" + std::string(text) + "'");
}

std::vector<std::size_t> Dataset::label_counts() const {
  std::vector<std::size_t> counts(class_names.size(), 0);
  for (const Sample& s : samples) ++counts.at(s.label);
  return counts;
}

Dataset generate_dataset(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("dataset size must be at least 1");
  std::vector<std::vector<Mask>> configs;
  for (std::string_view name : kBrickNames) configs.push_back(enumerate_configurations(name));

  Dataset ds;
  ds.class_names.assign(kBrickNames.begin(), kBrickNames.end());
  ds.seed = seed;
  ds.samples.reserve(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t label = rng.uniform_index(kBrickNames.size());
    const Mask mask = configs[label][rng.uniform_index(configs[label].size())];
    Tensor image(Shape{kGridSize, kGridSize, 1});
    for (std::size_t cell = 0; cell < kGridSize * kGridSize; ++cell) {
      image.data()[cell] = (mask >> cell) & 1u ? rng.uniform(kForegroundLow, kForegroundHigh)
                                               : rng.uniform(kBackgroundLow, kBackgroundHigh);
    }
    ds.samples.push_back({std::move(image), label});
  }
  return ds;
}

std::pair<Dataset, Dataset> split(const Dataset& dataset, double train_fraction,
                                  std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw DomainError("train fraction must lie in (0, 1)");
  }
  const std::size_t n = dataset.size();
  const auto n_train = static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n)));
  if (n_train == 0 || n_train == n) {
    throw DomainError("split of " + std::to_string(n) + " samples leaves an empty side");
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.uniform_index(i + 1)]);

  Dataset train{{}, dataset.class_names, SplitTag::kTrain, dataset.seed};
  Dataset test{{}, dataset.class_names, SplitTag::kTest, dataset.seed};
  train.samples.reserve(n_train);
  test.samples.reserve(n - n_train);
  for (std::size_t i = 0; i < n; ++i) {
    (i < n_train ? train : test).samples.push_back(dataset.samples[order[i]]);
  }
  return {std::move(train), std::move(test)};
}

Dataset filter_labels(const Dataset& dataset, std::span<const std::string> names) {
  if (names.empty()) throw DomainError("label filter needs at least one class name");
  std::vector<std::size_t> remap(dataset.class_names.size(), dataset.class_names.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto it = std::find(dataset.class_names.begin(), dataset.class_names.end(), names[k]);
    if (it == dataset.class_names.end()) {
      throw DomainError("unknown class name '" + names[k] + "'");
    }
    const auto old = static_cast<std::size_t>(it - dataset.class_names.begin());
    if (remap[old] != dataset.class_names.size()) {
      throw DomainError("class name '" + names[k] + "' listed twice");
    }
    remap[old] = k;
  }
  Dataset out{{}, {names.begin(), names.end()}, dataset.split, dataset.seed};
  for (const Sample& s : dataset.samples) {
    if (remap[s.label] != dataset.class_names.size()) out.samples.push_back({s.image, remap[s.label]});
  }
  return out;
}

void write_dataset(const Dataset& dataset, std::ostream& out) {
  json header = {{"format", kFormatName},
                 {"version", kFormatVersion},
                 {"class_names", dataset.class_names},
                 {"seed", dataset.seed},
                 {"split", to_string(dataset.split)},
                 {"count", dataset.size()}};
  out << header.dump() << '\n';
  for (const Sample& s : dataset.samples) {
    json record = {{"label", s.label}, {"pixels", s.image.values()}};
    out << record.dump() << '\n';
  }
}

Dataset read_dataset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto parse = [&]() {
    try {
      return json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
    }
  };

  if (!next_line()) throw ParseError(line_no + 1, "missing header line");
  Dataset ds;
  std::size_t count = 0;
  try {
    const json header = parse();
    if (header.at("format").get<std::string>() != kFormatName) {
      throw ParseError(line_no, "not a qccnn-tetris dataset");
    }
    if (header.at("version").get<std::uint64_t>() != kFormatVersion) {
      throw ParseError(line_no, "unsupported dataset version");
    }
    ds.class_names = header.at("class_names").get<std::vector<std::string>>();
    ds.seed = header.at("seed").get<std::uint64_t>();
    ds.split = parse_split_tag(header.at("split").get<std::string>());
    count = header.at("count").get<std::size_t>();
  } catch (const json::exception& e) {
    throw ParseError(line_no, std::string("bad header: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(line_no, e.what());
  }
  if (ds.class_names.empty()) throw ParseError(line_no, "header lists no classes");

  ds.samples.reserve(count);
  while (ds.samples.size() < count) {
    if (!next_line()) {
      throw ParseError(line_no + 1, "file truncated: expected " + std::to_string(count) +
                                        " samples, found " + std::to_string(ds.samples.size()));
    }
    std::size_t label = 0;
    std::vector<double> pixels;
    try {
      const json record = parse();
      label = record.at("label").get<std::size_t>();
      pixels = record.at("pixels").get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw ParseError(line_no, std::string("bad sample record: ") + e.what());
    }
    if (pixels.size() != kGridSize * kGridSize) {
      throw ParseError(line_no, "expected 9 pixels, got " + std::to_string(pixels.size()));
    }
    if (label >= ds.class_names.size()) {
      throw ValidationError("line " + std::to_string(line_no) + ": label " +
                            std::to_string(label) + " out of range");
    }
    for (double p : pixels) validate_pixel(p, line_no);
    ds.samples.push_back({Tensor(Shape{kGridSize, kGridSize, 1}, std::move(pixels)), label});
  }
  if (next_line()) throw ParseError(line_no, "unexpected data after the last sample");
  return ds;
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_dataset(dataset, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_dataset(in);
}

}  // namespace qccnn
