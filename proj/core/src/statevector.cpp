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

#include "qccnn/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qccnn/error.hpp"

namespace qccnn {
namespace {

double magnitude_squared(double a) { return a * a; }
double magnitude_squared(const std::complex<double>& a) { return std::norm(a); }

void check_qubit_count(std::size_t n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

template <typename Amplitude>
BasicStatevector<Amplitude>::BasicStatevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{});
  amplitudes_[0] = Amplitude{1};
}

template <typename Amplitude>
BasicStatevector<Amplitude>::BasicStatevector(std::size_t n_qubits,
                                              std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw SizeError("amplitude vector of length " + std::to_string(amplitudes_.size()) +
                    " does not match " + std::to_string(n_qubits) + " qubits");
  }
}

template <typename Amplitude>
void BasicStatevector<Amplitude>::reset() noexcept {
  std::fill(amplitudes_.begin(), amplitudes_.end(), Amplitude{});
  amplitudes_[0] = Amplitude{1};
}

template <typename Amplitude>
void BasicStatevector<Amplitude>::check_qubit(std::size_t qubit) const {
  if (qubit >= n_qubits_) {
    throw IndexError("qubit " + std::to_string(qubit) + " out of range for " +
                     std::to_string(n_qubits_) + "-qubit register");
  }
}

template <typename Amplitude>
void BasicStatevector<Amplitude>::apply_ry(std::size_t qubit, double angle) {
  apply_ry(qubit, std::cos(angle), std::sin(angle));
}

template <typename Amplitude>
void BasicStatevector<Amplitude>::apply_ry(std::size_t qubit, double c, double s) {
  check_qubit(qubit);
  const std::size_t mask = qubit_mask(qubit);
  const std::size_t dim = amplitudes_.size();
  Amplitude* amp = amplitudes_.data();
  for (std::size_t base = 0; base < dim; base += 2 * mask) {
    for (std::size_t i = base; i < base + mask; ++i) {
      const Amplitude a0 = amp[i];
      const Amplitude a1 = amp[i + mask];
      amp[i] = c * a0 - s * a1;
      amp[i + mask] = s * a0 + c * a1;
    }
  }
}

template <typename Amplitude>
void BasicStatevector<Amplitude>::apply_cnot(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw IndexError("CNOT control and target are both qubit " + std::to_string(control));
  }
  const std::size_t cmask = qubit_mask(control);
  const std::size_t tmask = qubit_mask(target);
  const std::size_t dim = amplitudes_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    // Visit each swapped pair once, from its target-bit-0 member.
    if ((i & cmask) != 0 && (i & tmask) == 0) {
      std::swap(amplitudes_[i], amplitudes_[i | tmask]);
    }
  }
}

template <typename Amplitude>
double BasicStatevector<Amplitude>::norm_squared() const noexcept {
  double sum = 0.0;
  for (const Amplitude& a : amplitudes_) sum += magnitude_squared(a);
  return sum;
}

template <typename Amplitude>
double BasicStatevector<Amplitude>::expectation_z_all() const {
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t b = 0; b < amplitudes_.size(); ++b) {
    const double p = magnitude_squared(amplitudes_[b]);
    if (std::popcount(b) & 1) {
      odd += p;
    } else {
      even += p;
    }
  }
  const double norm = even + odd;
  if (!(std::abs(norm - 1.0) <= kNormDriftTolerance)) {
    throw StateError("statevector norm drifted to " + std::to_string(norm));
  }
  return even - odd;
}

template class BasicStatevector<std::complex<double>>;
template class BasicStatevector<double>;

Statevector init_state(std::size_t n_qubits) { return Statevector(n_qubits); }

}  // namespace qccnn
