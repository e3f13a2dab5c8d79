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
#include <functional>

namespace qccnn {

/// Worker count from QCONV_THREADS; unset, empty or 0 means
/// std::thread::hardware_concurrency(). Always at least 1.
std::size_t worker_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(begin, end) on each. With one worker the body runs inline. If any
/// chunk throws, the exception from the lowest chunk is rethrown after all
/// workers finish. Callers keep results deterministic by writing to
/// per-index slots and reducing afterwards in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t workers = 0);

}  // namespace qccnn
