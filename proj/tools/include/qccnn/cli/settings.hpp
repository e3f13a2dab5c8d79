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
 * Flat key-value experiment settings shared by config files and flags.
 *
 * File format: one `key = value` per line; blank lines and lines starting
 * with '#' are ignored. Keys:
 *
 *   model           qccnn | cnn                      (qccnn)
 *   arch            one-layer | two-layer            (one-layer)
 *   labels          2 | 5                            (2)
 *   dataset_size    images generated per seed        (1000)
 *   train_fraction  share of images used for training (0.8)
 *   depth           circuit depth D                  (4)
 *   seeds           seed count; seeds are 0..n-1     (10)
 *   seed_list       explicit comma-separated seeds   (unset)
 *   iterations      ADAM steps                       (1000)
 *   lr, beta1, beta2, epsilon                        (0.01, 0.9, 0.999, 1e-8)
 *   batch_size      0 = full batch                   (0)
 *   eval_every      iterations between records       (10)
 */
#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "qccnn/experiment.hpp"

namespace qccnn::cli {

using Settings = std::map<std::string, std::string>;

/// Every key accepted by apply_settings, in documentation order.
std::span<const std::string_view> setting_keys();

/// Throws ConfigError for malformed lines, duplicate keys and unknown keys.
Settings parse_settings(std::istream& in);

/// Throws IoError when the file cannot be opened.
Settings load_settings(const std::filesystem::path& path);

/// Later entries win: overlay(base, top) keeps base keys absent from top.
Settings overlay(Settings base, const Settings& top);

/// Applies settings onto `config` and validates the result. Throws
/// ConfigError naming the offending key.
void apply_settings(const Settings& settings, ExperimentConfig& config);

/// Settings that reproduce `config`, for echoing into summaries.
Settings describe(const ExperimentConfig& config);

}  // namespace qccnn::cli
