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

// Two-state Lindblad dynamics in Bloch form, rho = (1 + P.sigma)/2, with
// H = 2 h.sigma and dissipators R_j = A_j.sigma + i B_j.sigma:
//
//   dP/dt = h x P + sum_j [ 2 A_j x B_j - A_j x (P x A_j) - B_j x (P x B_j) ].
//
// For h = 0 and a single dissipator the flow is the gradient of
//
//   S(P) = 2 (A x B).P - |P|^2 (A^2 + B^2)/2 + (A.P)^2/2 + (B.P)^2/2.

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qtk::lindblad {

using BlochVector = Eigen::Vector3d;

struct Dissipator {
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
};

struct LindbladChannel {
  Eigen::Vector3d h = Eigen::Vector3d::Zero();
  std::vector<Dissipator> dissipators;

  /// Throws InputError for non-finite entries.
  void validate() const;
};

/// Six pair-variables p = ((1 +- Px)/2, (1 +- Py)/2, (1 +- Pz)/2).
using SixState = std::array<double, 6>;

Eigen::Vector3d bloch_rhs(const LindbladChannel& ch, const BlochVector& p);

/// Affine-flow fixed point of bloch_rhs. Throws DegenerateError when the
/// linear part is singular.
BlochVector stationary_bloch(const LindbladChannel& ch);

/// 2 (A x B) / (A^2 + B^2). Throws DegenerateError for A = B = 0.
BlochVector stationary_bloch(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

double bloch_entropy(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                     const BlochVector& p);

/// Analytic gradient 2 (A x B) - P (A^2 + B^2) + (A.P) A + (B.P) B.
Eigen::Vector3d gradient_rhs(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                             const BlochVector& p);

/// The single dissipator of a channel with h = 0; throws
/// GradientFormUnavailable otherwise.
const Dissipator& gradient_dissipator(const LindbladChannel& ch);

SixState embed_six(const BlochVector& p);
BlochVector extract_bloch(const SixState& s);

/// Normalizer of the six-variable contraction for which d(p1-p2)/dt equals
/// dS/dPx exactly: 32 n^2 = 1.
inline const double kSixSlotNorm = 1.0 / std::sqrt(32.0);

/// Six-variable QT flow: multilinear::six_slot_main_term applied to the
/// gradient of bloch_entropy at extract_bloch(s).
std::array<double, 6> qt_six_rhs(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                 const SixState& s, double norm = kSixSlotNorm);

}  // namespace qtk::lindblad
