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
 * Subcommand implementations, independent of argument parsing.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qccnn/experiment.hpp"
#include "qccnn/pqc.hpp"

namespace qccnn::cli {

// --- gen-data -----------------------------------------------------------------

struct GenDataOptions {
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> labels;  // empty keeps all five classes
  std::filesystem::path out = "tetris.jsonl";
};

/// Writes the dataset and prints configuration and label counts.
void gen_data(const GenDataOptions& options, std::ostream& out);

// --- train --------------------------------------------------------------------

struct TrainOptions {
  ExperimentConfig config;
  std::filesystem::path csv = "metrics.csv";
  std::filesystem::path summary = "summary.json";
  bool quiet = false;
};

ExperimentResult train_command(const TrainOptions& options, std::ostream& out, std::ostream& log);

// --- gradcheck ----------------------------------------------------------------

struct GradcheckOptions {
  std::size_t cases = 200;
  std::vector<std::size_t> qubits{2, 4};  // cycled over cases
  std::optional<std::size_t> depth;       // unset cycles 1..max_depth
  std::size_t max_depth = 4;
  std::uint64_t seed = 0;
  ShiftRule rule = kExactShiftRule;
  double step = 1e-5;
  double tolerance = 1e-6;
};

struct GradcheckReport {
  std::size_t cases = 0;
  std::size_t components = 0;
  double max_deviation = 0.0;
  bool passed = true;
  // Worst component; meaningful when components > 0.
  std::size_t worst_case = 0;
  std::size_t worst_qubits = 0;
  std::size_t worst_depth = 0;
  std::size_t worst_param = 0;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
};

/// Shift-rule gradients of random circuits against central differences.
GradcheckReport gradcheck(const GradcheckOptions& options);

void print_gradcheck(const GradcheckReport& report, const GradcheckOptions& options,
                     std::ostream& out);

// --- repro --------------------------------------------------------------------

/// a: 2-label accuracy, b: 5-label accuracy, c: 2-label loss, d: 5-label loss.
struct ReproOptions {
  ExperimentConfig base;  // model, arch and labels are set per run
  std::vector<char> panels{'a', 'b', 'c', 'd'};
  std::filesystem::path out_dir = "repro";
  bool quiet = false;
};

/// Final mean test MSE of QCCNN against the CNN of the same architecture.
struct LossComparison {
  std::size_t labels = 0;
  Architecture arch = Architecture::kOneLayer;
  double qccnn_test_loss = 0.0;
  double cnn_test_loss = 0.0;
  bool holds = false;                          // qccnn strictly lower
  std::vector<std::uint64_t> discrepant_seeds;  // seeds where it does not hold
};

struct ReproResult {
  std::vector<ExperimentResult> experiments;
  std::vector<LossComparison> comparisons;
  std::vector<std::filesystem::path> files;
};

/// Throws ConfigError for an unknown panel letter.
ReproResult repro(const ReproOptions& options, std::ostream& out, std::ostream& log);

}  // namespace qccnn::cli
