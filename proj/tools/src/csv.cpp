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

#include "qccnn/cli/csv.hpp"

#include <cstdio>

namespace qccnn::cli {
namespace {

void write_record(std::ostream& out, const std::string& seed, const MetricsRecord& r) {
  out << r.iteration << ',' << seed << ',' << format_double(r.train_loss) << ','
      << format_double(r.test_loss) << ',' << format_double(r.test_accuracy) << '\n';
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_metrics_csv(const ExperimentResult& result, std::ostream& out) {
  out << "iteration,seed,train_loss,test_loss,test_accuracy\n";
  for (const SeedResult& run : result.runs) {
    for (const MetricsRecord& r : run.metrics) write_record(out, std::to_string(run.seed), r);
  }
  for (const MetricsRecord& r : result.mean) write_record(out, "mean", r);
}

void write_panel_header(PanelMetric metric, std::ostream& out) {
  out << "model,arch,labels,n_seeds,iteration,"
      << (metric == PanelMetric::kAccuracy ? "test_accuracy" : "train_loss,test_loss") << '\n';
}

void write_panel_rows(PanelMetric metric, const ExperimentResult& result, std::ostream& out) {
  const ExperimentConfig& c = result.config;
  for (const MetricsRecord& r : result.mean) {
    out << to_string(c.model) << ',' << to_string(c.arch) << ',' << c.labels << ','
        << result.runs.size() << ',' << r.iteration << ',';
    if (metric == PanelMetric::kAccuracy) {
      out << format_double(r.test_accuracy);
    } else {
      out << format_double(r.train_loss) << ',' << format_double(r.test_loss);
    }
    out << '\n';
  }
}

}  // namespace qccnn::cli
