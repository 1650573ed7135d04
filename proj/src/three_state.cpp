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

#include "qtk/three_state.hpp"

#include <cmath>

#include "qtk/error.hpp"

namespace qtk {

ThreeStateRates ThreeStateRates::from_array(const std::array<double, 6>& r) {
  for (double x : r) {
    if (!std::isfinite(x)) throw InputError("three-state rate is not finite");
    if (x < 0.0) throw InputError("three-state rate is negative");
  }
  return {r[0], r[1], r[2], r[3], r[4], r[5]};
}

pme::TransitionMatrix ThreeStateRates::to_transition_matrix() const {
  Eigen::Matrix3d w = Eigen::Matrix3d::Zero();
  w(1, 0) = a;
  w(2, 0) = b;
  w(0, 1) = c;
  w(2, 1) = d;
  w(0, 2) = e;
  w(1, 2) = f;
  return pme::TransitionMatrix(w);
}

}  // namespace qtk
