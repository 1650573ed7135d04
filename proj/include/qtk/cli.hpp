// Copyright 2026 The QTK Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

namespace qtk::cli {

/// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;        ///< runtime failure (divergence, I/O)
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNonConvergence = 3;

/// Entry point of the `qtk` binary: `qtk <command> <config.json> [options]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtk::cli
