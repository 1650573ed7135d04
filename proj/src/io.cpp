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

#include "qtk/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include "qtk/error.hpp"

namespace qtk::io {

double round_sig(double x, int precision) {
  if (!std::isfinite(x) || precision >= 17) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision < 1 ? 1 : precision, x);
  return std::strtod(buf, nullptr);
}

json number(double x, int precision) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x, precision);
}

json to_json(const qtfit::QTRepresentation& rep, int precision) {
  json q = json::array();
  for (Eigen::Index i = 0; i < rep.entropy.q.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < rep.entropy.q.cols(); ++k) {
      row.push_back(number(rep.entropy.q(i, k), precision));
    }
    q.push_back(std::move(row));
  }
  json r = json::array();
  for (double x : rep.r) r.push_back(number(x, precision));
  json subsets = json::array();
  for (const auto& s : rep.subsets) {
    json one = json::array();
    for (int idx : s) one.push_back(idx + 1);
    subsets.push_back(std::move(one));
  }
  return json{{"n", rep.n},
              {"q", std::move(q)},
              {"r", std::move(r)},
              {"subsets", std::move(subsets)},
              {"norm", number(rep.norm, precision)},
              {"residual", number(rep.residual, precision)}};
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace qtk::io
