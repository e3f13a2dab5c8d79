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
#include <random>

namespace qccnn {

/**
 * Seeded generator with portable draws.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. The standard distributions are not, so the conversions to
 * doubles and bounded integers are implemented here:
 *   uniform01()        = (x >> 11) * 2^-53, in [0, 1)
 *   uniform_index(n)   = x mod n after rejecting the top partial block
 * Datasets generated from the same seed are therefore identical across
 * compilers and standard libraries.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform01();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform on {0, ..., n-1}. `n` must be positive.
  std::size_t uniform_index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed from (seed, stream) with splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qccnn
