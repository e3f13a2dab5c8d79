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
 * CSV emitters. Floats are written with %.17g so values round-trip exactly.
 *
 * Metrics (long format, one row per seed and record, then the mean rows):
 *   iteration,seed,train_loss,test_loss,test_accuracy
 *   10,0,...
 *   10,mean,...
 *
 * Accuracy panels (a, b):
 *   model,arch,labels,n_seeds,iteration,test_accuracy
 * Loss panels (c, d):
 *   model,arch,labels,n_seeds,iteration,train_loss,test_loss
 */
#pragma once

#include <ostream>
#include <span>
#include <string>

#include "qccnn/experiment.hpp"

namespace qccnn::cli {

std::string format_double(double value);

void write_metrics_csv(const ExperimentResult& result, std::ostream& out);

enum class PanelMetric { kAccuracy, kLoss };

void write_panel_header(PanelMetric metric, std::ostream& out);
void write_panel_rows(PanelMetric metric, const ExperimentResult& result, std::ostream& out);

}  // namespace qccnn::cli
