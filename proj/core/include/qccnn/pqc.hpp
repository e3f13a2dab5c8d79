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
 * Parametric quantum circuit used as a convolution filter.
 *
 * A window of N real values is encoded as the product state
 * (x)_j (cos v_j |0> + sin v_j |1>), evolved by D repetitions of
 * [Ry on every qubit, CNOT ladder 0->1->...->N-1], and read out as the
 * expectation of Z on all qubits.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "qccnn/statevector.hpp"

namespace qccnn {

enum class GateKind : std::uint8_t { kRy, kCnot };

struct Gate {
  GateKind kind;
  std::size_t qubit;   // Ry target, or CNOT control
  std::size_t target;  // CNOT target; unused for Ry
  std::size_t param;   // index into the angle vector; unused for CNOT

  friend bool operator==(const Gate&, const Gate&) = default;
};

/**
 * Gate layout of the filter circuit. Gates are stored flat, in application
 * order, layer after layer. Ry parameters are numbered by
 * (depth block, qubit): gate Ry(q) of block d reads angle d * N + q.
 */
class CircuitSpec {
 public:
  CircuitSpec() = default;
  CircuitSpec(std::size_t n_qubits, std::size_t depth);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t param_count() const noexcept { return n_qubits_ * depth_; }
  std::size_t cnot_count() const noexcept { return (n_qubits_ - 1) * depth_; }
  std::size_t gate_count() const noexcept { return gates_.size(); }
  std::span<const Gate> gates() const noexcept { return gates_; }

  friend bool operator==(const CircuitSpec&, const CircuitSpec&) = default;

 private:
  std::size_t n_qubits_ = 1;
  std::size_t depth_ = 0;
  std::vector<Gate> gates_;
};

/// Throws SizeError if n_qubits is 0 or exceeds kMaxQubits.
CircuitSpec build_circuit(std::size_t n_qubits, std::size_t depth);

/**
 * Two-point shift rule: d f / d a = coefficient * (f(a + shift) - f(a - shift)).
 *
 * Because Ry enters with the full angle, every expectation value is a
 * sinusoid of frequency 2 in each angle, and the exact rule is
 * shift = pi/4 with coefficient 1. This is the usual +-pi/2, 1/2 rule
 * written for the half-angle 2a.
 */
struct ShiftRule {
  double shift = std::numbers::pi / 4;
  double coefficient = 1.0;
};

inline constexpr ShiftRule kExactShiftRule{};

/// Product-state encoding of a window. Qubit j receives Ry(values[j]) on |0>.
template <typename Amplitude = std::complex<double>>
BasicStatevector<Amplitude> encode_window(std::span<const double> values) {
  BasicStatevector<Amplitude> state(values.size());
  for (std::size_t q = 0; q < values.size(); ++q) state.apply_ry(q, values[q]);
  return state;
}

/// Applies the circuit to `state` in place. Throws ShapeError on a parameter
/// or qubit-count mismatch.
template <typename Amplitude>
void run_circuit(const CircuitSpec& spec, std::span<const double> params,
                 BasicStatevector<Amplitude>& state);

extern template void run_circuit(const CircuitSpec&, std::span<const double>, Statevector&);
extern template void run_circuit(const CircuitSpec&, std::span<const double>, RealStatevector&);

/// Returns C(params) |input>.
Statevector run_circuit(const CircuitSpec& spec, std::span<const double> params,
                        Statevector input);

/// <Z...Z> after encoding `window` and running the circuit. Lies in [-1, 1].
double quantum_feature(const CircuitSpec& spec, std::span<const double> params,
                       std::span<const double> window);

/// Shift-rule gradient of quantum_feature with respect to every circuit angle.
std::vector<double> param_shift_grad(const CircuitSpec& spec, std::span<const double> params,
                                     std::span<const double> window,
                                     ShiftRule rule = kExactShiftRule);

/// Shift-rule gradient with respect to the window values. The encoding is a
/// layer of Ry gates whose angles are the window values, so the same rule
/// applies unchanged.
std::vector<double> input_grad(const CircuitSpec& spec, std::span<const double> params,
                               std::span<const double> window,
                               ShiftRule rule = kExactShiftRule);

/**
 * Reusable workspace that evaluates a filter and its shift-rule gradients.
 *
 * The encoding layer and the circuit are treated as one gate list over the
 * angle vector [window..., params...]. A forward sweep snapshots the state in
 * front of every Ry gate, so shifted evaluations only replay the gates after
 * the shifted one.
 *
 * Both shifted expectations come from one replay. With u the unshifted
 * output and w the output with the angle advanced by pi/2,
 * Ry(a +- s) = cos(s) Ry(a) +- sin(s) Ry(a + pi/2) gives the shifted outputs
 * cos(s) u +- sin(s) w exactly, so
 *   f(a +- s) = c^2 <u|Z|u> +- 2 c s <u|Z|w> + s^2 <w|Z|w>.
 *
 * Runs of consecutive CNOTs are fused into a single basis permutation, and a
 * trailing permutation is folded into the parity signs of the readout.
 * Amplitudes are real throughout.
 *
 * Not thread-safe; use one evaluator per thread.
 */
class FeatureEvaluator {
 public:
  explicit FeatureEvaluator(CircuitSpec spec, ShiftRule rule = kExactShiftRule);

  const CircuitSpec& spec() const noexcept { return spec_; }
  const ShiftRule& rule() const noexcept { return rule_; }

  /// Loads circuit angles for subsequent window evaluations. Throws
  /// ShapeError on a length mismatch and DomainError on non-finite values.
  void set_params(std::span<const double> params);

  /// Feature of `window` under the loaded parameters.
  double value(std::span<const double> window);

  /// Returns the feature value and fills `param_grad` (length param_count)
  /// and, when non-empty, `window_grad` (length n_qubits).
  double value_and_gradients(std::span<const double> window, std::span<double> param_grad,
                             std::span<double> window_grad);

  double value(std::span<const double> params, std::span<const double> window) {
    set_params(params);
    return value(window);
  }
  double value_and_gradients(std::span<const double> params, std::span<const double> window,
                             std::span<double> param_grad, std::span<double> window_grad) {
    set_params(params);
    return value_and_gradients(window, param_grad, window_grad);
  }

 private:
  struct Op {
    bool is_ry;
    std::size_t qubit_mask;  // Ry only
    std::size_t index;       // angle slot for Ry, permutation table for CNOT runs
  };

  void load_window(std::span<const double> window);
  // Dim is the amplitude count when known at compile time, 0 otherwise.
  template <std::size_t Dim>
  void replay(double*& amp, std::size_t first_op);
  template <std::size_t Dim>
  double forward(bool snapshot);
  struct ShiftedPair {
    double plus;
    double minus;
  };
  template <std::size_t Dim>
  ShiftedPair shifted_values(std::size_t op_index, double value);
  template <std::size_t Dim>
  double gradients_impl(std::span<double> param_grad, std::span<double> window_grad);
  double readout(const double* amp) const;
  double cross_parity(const double* u, const double* w) const;

  CircuitSpec spec_;
  ShiftRule rule_;
  std::size_t dim_;
  std::vector<Op> ops_;                  // replayed ops; a trailing CNOT run is dropped
  std::vector<std::size_t> op_of_angle_;
  std::vector<std::vector<std::uint32_t>> gather_;  // out[j] = in[gather[j]]
  std::vector<double> signs_;            // parity signs with the dropped run folded in
  std::vector<double> angles_;
  std::vector<double> cos_;
  std::vector<double> sin_;
  bool params_loaded_ = false;
  std::vector<double> snapshots_;        // dim_ amplitudes per angle slot
  std::vector<double> buffer_a_;
  std::vector<double> buffer_b_;
  std::vector<double> output_;  // unshifted final state of the last forward sweep
};

}  // namespace qccnn
