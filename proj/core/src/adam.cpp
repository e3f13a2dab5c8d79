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

#include "qccnn/adam.hpp"

#include <cmath>
#include <string>

#include "qccnn/error.hpp"

namespace qccnn {

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state) {
  if (grads.size() != params.size() || state.m.size() != params.size() ||
      state.v.size() != params.size()) {
    throw ShapeError("adam_step length mismatch: params " + std::to_string(params.size()) +
                     ", grads " + std::to_string(grads.size()) + ", state " +
                     std::to_string(state.m.size()));
  }
  const AdamHyper& h = state.hyper;
  ++state.t;
  const double t = static_cast<double>(state.t);
  const double bias1 = 1.0 - std::pow(h.beta1, t);
  const double bias2 = 1.0 - std::pow(h.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    state.m[i] = h.beta1 * state.m[i] + (1.0 - h.beta1) * g;
    state.v[i] = h.beta2 * state.v[i] + (1.0 - h.beta2) * g * g;
    const double m_hat = state.m[i] / bias1;
    const double v_hat = state.v[i] / bias2;
    params[i] -= h.lr * m_hat / (std::sqrt(v_hat) + h.epsilon);
  }
}

}  // namespace qccnn
