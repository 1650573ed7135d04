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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qtk/qtfit.hpp"

namespace qtk::io {

using json = nlohmann::json;

/// `x` rounded to `precision` significant decimal digits. JSON output stores
/// the rounded value; its shortest round-trip text then has at most
/// `precision` digits and parses back to the same double.
double round_sig(double x, int precision);

/// Number node for `x`, rounded; non-finite values become null.
json number(double x, int precision);

/// {"n", "q", "r", "subsets" (1-based basis numbers), "norm", "residual"}
json to_json(const qtfit::QTRepresentation& rep, int precision);

/// Writes `content` to a sibling temp file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qtk::io
