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

#include "qccnn/cli/settings.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

#include "qccnn/cli/csv.hpp"
#include "qccnn/error.hpp"

namespace qccnn::cli {
namespace {

constexpr std::array<std::string_view, 15> kKeys{
    "model", "arch",     "labels",     "dataset_size", "train_fraction", "depth",   "seeds",
    "seed_list", "iterations", "lr",  "beta1",        "beta2",          "epsilon", "batch_size",
    "eval_every"};

bool is_key(std::string_view key) {
  for (std::string_view k : kKeys) {
    if (k == key) return true;
  }
  return false;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& key, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError(key, "cannot parse '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& key, std::string_view text) {
  std::vector<std::uint64_t> seeds;
  while (!text.empty()) {
    const auto comma = text.find(',');
    seeds.push_back(parse_number<std::uint64_t>(key, trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (seeds.empty()) throw ConfigError(key, "empty seed list");
  return seeds;
}

}  // namespace

std::span<const std::string_view> setting_keys() { return kKeys; }

Settings parse_settings(std::istream& in) {
  Settings out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    const std::string where = "config line " + std::to_string(number);
    if (eq == std::string::npos) throw ConfigError(where, "expected key = value");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (!is_key(key)) throw ConfigError(key, "unknown key (" + where + ")");
    if (!out.emplace(key, value).second) throw ConfigError(key, "duplicate key (" + where + ")");
  }
  return out;
}

Settings load_settings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  return parse_settings(in);
}

Settings overlay(Settings base, const Settings& top) {
  for (const auto& [k, v] : top) base[k] = v;
  return base;
}

void apply_settings(const Settings& settings, ExperimentConfig& config) {
  if (settings.contains("seeds") && settings.contains("seed_list")) {
    throw ConfigError("seed_list", "give either seeds or seed_list, not both");
  }
  for (const auto& [key, value] : settings) {
    if (key == "model") {
      config.model = parse_model(value);
    } else if (key == "arch") {
      config.arch = parse_architecture(value);
    } else if (key == "labels") {
      config.labels = parse_number<std::size_t>(key, value);
    } else if (key == "dataset_size") {
      config.dataset_size = parse_number<std::size_t>(key, value);
    } else if (key == "train_fraction") {
      config.train_fraction = parse_number<double>(key, value);
    } else if (key == "depth") {
      config.circuit_depth = parse_number<std::size_t>(key, value);
    } else if (key == "seeds") {
      config.seeds = default_seeds(parse_number<std::size_t>(key, value));
    } else if (key == "seed_list") {
      config.seeds = parse_seed_list(key, value);
    } else if (key == "iterations") {
      config.train.iterations = parse_number<std::size_t>(key, value);
    } else if (key == "lr") {
      config.train.adam.lr = parse_number<double>(key, value);
    } else if (key == "beta1") {
      config.train.adam.beta1 = parse_number<double>(key, value);
    } else if (key == "beta2") {
      config.train.adam.beta2 = parse_number<double>(key, value);
    } else if (key == "epsilon") {
      config.train.adam.epsilon = parse_number<double>(key, value);
    } else if (key == "batch_size") {
      config.train.batch_size = parse_number<std::size_t>(key, value);
    } else if (key == "eval_every") {
      config.train.eval_every = parse_number<std::size_t>(key, value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  config.validate();
}

Settings describe(const ExperimentConfig& config) {
  std::string seeds;
  for (std::size_t i = 0; i < config.seeds.size(); ++i) {
    if (i > 0) seeds += ",";
    seeds += std::to_string(config.seeds[i]);
  }
  return {
      {"model", to_string(config.model)},
      {"arch", to_string(config.arch)},
      {"labels", std::to_string(config.labels)},
      {"dataset_size", std::to_string(config.dataset_size)},
      {"train_fraction", format_double(config.train_fraction)},
      {"depth", std::to_string(config.circuit_depth)},
      {"seed_list", seeds},
      {"iterations", std::to_string(config.train.iterations)},
      {"lr", format_double(config.train.adam.lr)},
      {"beta1", format_double(config.train.adam.beta1)},
      {"beta2", format_double(config.train.adam.beta2)},
      {"epsilon", format_double(config.train.adam.epsilon)},
      {"batch_size", std::to_string(config.train.batch_size)},
      {"eval_every", std::to_string(config.train.eval_every)},
  };
}

}  // namespace qccnn::cli
