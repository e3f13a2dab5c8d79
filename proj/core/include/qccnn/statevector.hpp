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
 * Dense statevector simulation of a small qubit register.
 *
 * Basis convention: qubit 0 is the most significant bit of the basis index.
 * For an n-qubit register, qubit q is addressed by the mask 1 << (n - 1 - q),
 * so the amplitude of |b_0 b_1 ... b_{n-1}> lives at index
 * b_0 * 2^{n-1} + ... + b_{n-1}. Every gate and measurement in the library
 * follows this ordering.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qccnn {

inline constexpr std::size_t kMaxQubits = 24;

// Statevectors whose squared norm drifts further than this from 1 are
// rejected by expectation_z_all().
inline constexpr double kNormDriftTolerance = 1e-8;

/**
 * Amplitude vector over the 2^n computational basis states.
 *
 * `Amplitude` is either std::complex<double> (the general type, aliased as
 * Statevector) or double. The real instantiation is exact for circuits built
 * from Ry and CNOT acting on real inputs, which is every circuit in this
 * library, and is what the training hot path uses.
 */
template <typename Amplitude>
class BasicStatevector {
 public:
  using amplitude_type = Amplitude;

  /// Prepares |0...0>. Throws SizeError unless 1 <= n_qubits <= kMaxQubits.
  explicit BasicStatevector(std::size_t n_qubits);

  /// Adopts explicit amplitudes. The length must be 2^n_qubits; no
  /// normalisation is applied.
  BasicStatevector(std::size_t n_qubits, std::vector<Amplitude> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }

  /// Returns the register to |0...0> without reallocating.
  void reset() noexcept;

  /// Bit mask selecting `qubit` within a basis index.
  std::size_t qubit_mask(std::size_t qubit) const noexcept {
    return std::size_t{1} << (n_qubits_ - 1 - qubit);
  }

  /// Applies [[cos a, -sin a], [sin a, cos a]] to `qubit`. The angle enters
  /// the matrix directly (no half-angle).
  void apply_ry(std::size_t qubit, double angle);

  /// Same as apply_ry with precomputed cos/sin of the angle.
  void apply_ry(std::size_t qubit, double cos_angle, double sin_angle);

  /// Flips `target` on every basis state whose `control` bit is set.
  void apply_cnot(std::size_t control, std::size_t target);

  double norm_squared() const noexcept;

  /// Exact <psi| Z x Z x ... x Z |psi> = sum_b (-1)^popcount(b) |a_b|^2.
  /// Throws StateError if the squared norm has drifted by more than
  /// kNormDriftTolerance.
  double expectation_z_all() const;

  friend bool operator==(const BasicStatevector&, const BasicStatevector&) = default;

 private:
  void check_qubit(std::size_t qubit) const;

  std::size_t n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

using Statevector = BasicStatevector<std::complex<double>>;
using RealStatevector = BasicStatevector<double>;

extern template class BasicStatevector<std::complex<double>>;
extern template class BasicStatevector<double>;

/// |0...0> on `n_qubits` qubits.
Statevector init_state(std::size_t n_qubits);

}  // namespace qccnn
