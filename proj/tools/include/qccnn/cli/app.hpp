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
 * Argument parsing and exit-code mapping for the `qccnn` tool.
 *
 * Exit codes: 0 success, 1 configuration error, 2 runtime error or
 * divergence (including a failed gradcheck), 3 file I/O error.
 */
#pragma once

#include <ostream>

namespace qccnn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitIo = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qccnn::cli
