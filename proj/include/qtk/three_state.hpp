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

// Six-rate parameterization of a three-state chain:
//
//   dp1/dt = -(a+b) p1 + c p2 + e p3
//   dp2/dt =  a p1 - (c+d) p2 + f p3
//   dp3/dt =  b p1 + d p2 - (e+f) p3
//
// i.e. a = W21, b = W31, c = W12, d = W32, e = W13, f = W23.

#include <array>

#include "qtk/pme.hpp"

namespace qtk {

struct ThreeStateRates {
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  /// Throws InputError for negative or non-finite rates.
  static ThreeStateRates from_array(const std::array<double, 6>& r);
  std::array<double, 6> to_array() const { return {a, b, c, d, e, f}; }
  pme::TransitionMatrix to_transition_matrix() const;
};

}  // namespace qtk
