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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qccnn {

struct AdamHyper {
  double lr = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Moment estimates for the bias-corrected ADAM update.
struct AdamState {
  AdamState() = default;
  AdamState(std::size_t n_params, AdamHyper hyper)
      : hyper(hyper), m(n_params, 0.0), v(n_params, 0.0) {}

  AdamHyper hyper;
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t t = 0;
};

/// One ADAM step in place:
///   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2,
///   p <- p - lr * (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps).
/// Throws ShapeError when params, grads and state lengths disagree.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

}  // namespace qccnn
