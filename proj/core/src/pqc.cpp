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

#include "qccnn/pqc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qccnn/error.hpp"

namespace qccnn {
namespace {

void check_params(const CircuitSpec& spec, std::span<const double> params) {
  if (params.size() != spec.param_count()) {
    throw ShapeError("circuit expects " + std::to_string(spec.param_count()) +
                     " parameters, got " + std::to_string(params.size()));
  }
}

void check_window(const CircuitSpec& spec, std::span<const double> window) {
  if (window.size() != spec.n_qubits()) {
    throw ShapeError("circuit has " + std::to_string(spec.n_qubits()) +
                     " qubits, window has " + std::to_string(window.size()) + " values");
  }
}

void check_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError(std::string("non-finite ") + what);
  }
}

// Ry on every amplitude pair (i, i + mask) with the mask bit of i clear.
// The k-th pair starts at i = (k with a zero bit inserted at the mask position).
template <std::size_t Dim>
inline void ry_pairs(double* amp, std::size_t dim, std::size_t mask, double c, double s) {
  const std::size_t half = (Dim != 0 ? Dim : dim) / 2;
  const std::size_t low = mask - 1;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i = ((k & ~low) << 1) | (k & low);
    const double a0 = amp[i];
    const double a1 = amp[i + mask];
    amp[i] = c * a0 - s * a1;
    amp[i + mask] = s * a0 + c * a1;
  }
}

}  // namespace

CircuitSpec::CircuitSpec(std::size_t n_qubits, std::size_t depth)
    : n_qubits_(n_qubits), depth_(depth) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("circuit qubit count " + std::to_string(n_qubits) + " out of range");
  }
  gates_.reserve(depth * (2 * n_qubits - 1));
  for (std::size_t d = 0; d < depth; ++d) {
    for (std::size_t q = 0; q < n_qubits; ++q) {
      gates_.push_back({GateKind::kRy, q, 0, d * n_qubits + q});
    }
    for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
      gates_.push_back({GateKind::kCnot, q, q + 1, 0});
    }
  }
}

CircuitSpec build_circuit(std::size_t n_qubits, std::size_t depth) {
  return CircuitSpec(n_qubits, depth);
}

template <typename Amplitude>
void run_circuit(const CircuitSpec& spec, std::span<const double> params,
                 BasicStatevector<Amplitude>& state) {
  check_params(spec, params);
  if (state.n_qubits() != spec.n_qubits()) {
    throw ShapeError("circuit has " + std::to_string(spec.n_qubits()) +
                     " qubits, state has " + std::to_string(state.n_qubits()));
  }
  for (const Gate& g : spec.gates()) {
    if (g.kind == GateKind::kRy) {
      state.apply_ry(g.qubit, params[g.param]);
    } else {
      state.apply_cnot(g.qubit, g.target);
    }
  }
}

template void run_circuit(const CircuitSpec&, std::span<const double>, Statevector&);
template void run_circuit(const CircuitSpec&, std::span<const double>, RealStatevector&);

Statevector run_circuit(const CircuitSpec& spec, std::span<const double> params,
                        Statevector input) {
  run_circuit<std::complex<double>>(spec, params, input);
  return input;
}

double quantum_feature(const CircuitSpec& spec, std::span<const double> params,
                       std::span<const double> window) {
  FeatureEvaluator evaluator(spec);
  return evaluator.value(params, window);
}

std::vector<double> param_shift_grad(const CircuitSpec& spec, std::span<const double> params,
                                     std::span<const double> window, ShiftRule rule) {
  FeatureEvaluator evaluator(spec, rule);
  std::vector<double> grad(spec.param_count());
  evaluator.value_and_gradients(params, window, grad, {});
  return grad;
}

std::vector<double> input_grad(const CircuitSpec& spec, std::span<const double> params,
                               std::span<const double> window, ShiftRule rule) {
  FeatureEvaluator evaluator(spec, rule);
  std::vector<double> param_grad(spec.param_count());
  std::vector<double> grad(spec.n_qubits());
  evaluator.value_and_gradients(params, window, param_grad, grad);
  return grad;
}

// ---------------------------------------------------------------------------
// FeatureEvaluator

FeatureEvaluator::FeatureEvaluator(CircuitSpec spec, ShiftRule rule)
    : spec_(std::move(spec)), rule_(rule), dim_(std::size_t{1} << spec_.n_qubits()) {
  const std::size_t n = spec_.n_qubits();
  const std::size_t n_angles = n + spec_.param_count();
  auto mask_of = [n](std::size_t q) { return std::size_t{1} << (n - 1 - q); };

  // Angle layout: [window values..., circuit params...].
  std::vector<Gate> gates;
  gates.reserve(n + spec_.gate_count());
  for (std::size_t q = 0; q < n; ++q) gates.push_back({GateKind::kRy, q, 0, q});
  for (Gate g : spec_.gates()) {
    if (g.kind == GateKind::kRy) g.param += n;
    gates.push_back(g);
  }

  op_of_angle_.assign(n_angles, 0);
  for (std::size_t i = 0; i < gates.size();) {
    if (gates[i].kind == GateKind::kRy) {
      op_of_angle_[gates[i].param] = ops_.size();
      ops_.push_back({true, mask_of(gates[i].qubit), gates[i].param});
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < gates.size() && gates[end].kind == GateKind::kCnot) ++end;
    // a_k[j] = a_{k-1}[f_k(j)], so the fused table applies the flips last to first.
    std::vector<std::uint32_t> table(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      std::size_t idx = j;
      for (std::size_t k = end; k-- > i;) {
        if (idx & mask_of(gates[k].qubit)) idx ^= mask_of(gates[k].target);
      }
      table[j] = static_cast<std::uint32_t>(idx);
    }
    ops_.push_back({false, 0, gather_.size()});
    gather_.push_back(std::move(table));
    i = end;
  }

  // Fold a trailing permutation into the readout:
  // sum_j sign(j) a[G(j)]^2 = sum_c sign(G^-1(c)) a[c]^2.
  signs_.resize(dim_);
  for (std::size_t j = 0; j < dim_; ++j) signs_[j] = (std::popcount(j) & 1) ? -1.0 : 1.0;
  if (!ops_.empty() && !ops_.back().is_ry) {
    const auto& table = gather_[ops_.back().index];
    std::vector<double> folded(dim_);
    for (std::size_t j = 0; j < dim_; ++j) folded[table[j]] = signs_[j];
    signs_ = std::move(folded);
    ops_.pop_back();
  }

  angles_.resize(n_angles);
  cos_.resize(n_angles);
  sin_.resize(n_angles);
  snapshots_.resize(n_angles * dim_);
  buffer_a_.resize(dim_);
  buffer_b_.resize(dim_);
  output_.resize(dim_);
}

void FeatureEvaluator::set_params(std::span<const double> params) {
  check_params(spec_, params);
  check_finite(params, "circuit parameter");
  const std::size_t n = spec_.n_qubits();
  for (std::size_t i = 0; i < params.size(); ++i) {
    angles_[n + i] = params[i];
    cos_[n + i] = std::cos(params[i]);
    sin_[n + i] = std::sin(params[i]);
  }
  params_loaded_ = true;
}

void FeatureEvaluator::load_window(std::span<const double> window) {
  if (!params_loaded_) throw StateError("FeatureEvaluator used before set_params");
  check_window(spec_, window);
  check_finite(window, "window value");
  for (std::size_t i = 0; i < window.size(); ++i) {
    angles_[i] = window[i];
    cos_[i] = std::cos(window[i]);
    sin_[i] = std::sin(window[i]);
  }
}

template <std::size_t Dim>
void FeatureEvaluator::replay(double*& amp, std::size_t first_op) {
  const std::size_t dim = Dim != 0 ? Dim : dim_;
  for (std::size_t i = first_op; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    if (op.is_ry) {
      ry_pairs<Dim>(amp, dim, op.qubit_mask, cos_[op.index], sin_[op.index]);
    } else {
      double* out = amp == buffer_a_.data() ? buffer_b_.data() : buffer_a_.data();
      const std::uint32_t* g = gather_[op.index].data();
      for (std::size_t j = 0; j < dim; ++j) out[j] = amp[g[j]];
      amp = out;
    }
  }
}

double FeatureEvaluator::readout(const double* amp) const {
  double norm = 0.0;
  double parity = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) {
    const double p = amp[j] * amp[j];
    norm += p;
    parity += signs_[j] * p;
  }
  if (!(std::abs(norm - 1.0) <= kNormDriftTolerance)) {
    throw StateError("statevector norm drifted to " + std::to_string(norm));
  }
  return parity;
}

template <std::size_t Dim>
double FeatureEvaluator::forward(bool snapshot) {
  const std::size_t dim = Dim != 0 ? Dim : dim_;
  double* amp = buffer_a_.data();
  std::fill_n(amp, dim, 0.0);
  amp[0] = 1.0;
  if (!snapshot) {
    replay<Dim>(amp, 0);
    return readout(amp);
  }
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    if (op.is_ry) std::copy_n(amp, dim, snapshots_.data() + op.index * dim);
    if (op.is_ry) {
      ry_pairs<Dim>(amp, dim, op.qubit_mask, cos_[op.index], sin_[op.index]);
    } else {
      double* out = amp == buffer_a_.data() ? buffer_b_.data() : buffer_a_.data();
      const std::uint32_t* g = gather_[op.index].data();
      for (std::size_t j = 0; j < dim; ++j) out[j] = amp[g[j]];
      amp = out;
    }
  }
  std::copy_n(amp, dim, output_.data());
  return readout(amp);
}

template <std::size_t Dim>
FeatureEvaluator::ShiftedPair FeatureEvaluator::shifted_values(std::size_t op_index,
                                                                 double value) {
  const std::size_t dim = Dim != 0 ? Dim : dim_;
  const Op& op = ops_[op_index];
  double* amp = buffer_a_.data();
  std::copy_n(snapshots_.data() + op.index * dim, dim, amp);
  // Ry(a + pi/2): cos -> -sin, sin -> cos.
  ry_pairs<Dim>(amp, dim, op.qubit_mask, -sin_[op.index], cos_[op.index]);
  replay<Dim>(amp, op_index + 1);
  const double ww = readout(amp);
  const double uw = cross_parity(output_.data(), amp);
  const double c = std::cos(rule_.shift);
  const double s = std::sin(rule_.shift);
  const double common = c * c * value + s * s * ww;
  return {common + 2.0 * c * s * uw, common - 2.0 * c * s * uw};
}

template <std::size_t Dim>
double FeatureEvaluator::gradients_impl(std::span<double> param_grad,
                                        std::span<double> window_grad) {
  const std::size_t n = spec_.n_qubits();
  const double value = forward<Dim>(true);
  const std::size_t first = window_grad.empty() ? n : 0;
  for (std::size_t slot = first; slot < angles_.size(); ++slot) {
    const std::size_t op = op_of_angle_[slot];
    const ShiftedPair f = shifted_values<Dim>(op, value);
    const double grad = rule_.coefficient * (f.plus - f.minus);
    if (slot < n) {
      window_grad[slot] = grad;
    } else {
      param_grad[slot - n] = grad;
    }
  }
  return value;
}

double FeatureEvaluator::cross_parity(const double* u, const double* w) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) sum += signs_[j] * u[j] * w[j];
  return sum;
}

double FeatureEvaluator::value(std::span<const double> window) {
  load_window(window);
  switch (dim_) {
    case 4:
      return forward<4>(false);
    case 16:
      return forward<16>(false);
    default:
      return forward<0>(false);
  }
}

double FeatureEvaluator::value_and_gradients(std::span<const double> window,
                                             std::span<double> param_grad,
                                             std::span<double> window_grad) {
  load_window(window);
  if (param_grad.size() != spec_.param_count()) {
    throw ShapeError("parameter gradient buffer has wrong length");
  }
  if (!window_grad.empty() && window_grad.size() != spec_.n_qubits()) {
    throw ShapeError("window gradient buffer has wrong length");
  }
  switch (dim_) {
    case 4:
      return gradients_impl<4>(param_grad, window_grad);
    case 16:
      return gradients_impl<16>(param_grad, window_grad);
    default:
      return gradients_impl<0>(param_grad, window_grad);
  }
}

}  // namespace qccnn
