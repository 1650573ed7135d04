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

#include "qtk/lindblad.hpp"

#include <string>

#include "qtk/error.hpp"
#include "qtk/multilinear.hpp"

namespace qtk::lindblad {

void LindbladChannel::validate() const {
  if (!h.allFinite()) throw InputError("channel h has non-finite entries");
  for (std::size_t j = 0; j < dissipators.size(); ++j) {
    if (!dissipators[j].a.allFinite() || !dissipators[j].b.allFinite()) {
      throw InputError("dissipator " + std::to_string(j) + " has non-finite entries");
    }
  }
}

Eigen::Vector3d bloch_rhs(const LindbladChannel& ch, const BlochVector& p) {
  Eigen::Vector3d out = ch.h.cross(p);
  for (const auto& d : ch.dissipators) {
    out += 2.0 * d.a.cross(d.b) - d.a.cross(p.cross(d.a)) - d.b.cross(p.cross(d.b));
  }
  return out;
}

BlochVector stationary_bloch(const LindbladChannel& ch) {
  // bloch_rhs is affine: M P + c
  const Eigen::Vector3d c = bloch_rhs(ch, Eigen::Vector3d::Zero());
  Eigen::Matrix3d m;
  for (int k = 0; k < 3; ++k) m.col(k) = bloch_rhs(ch, Eigen::Vector3d::Unit(k)) - c;
  Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) {
    throw DegenerateError("channel has no unique stationary Bloch vector");
  }
  return lu.solve(-c);
}

BlochVector stationary_bloch(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const double weight = a.squaredNorm() + b.squaredNorm();
  if (weight == 0.0) throw DegenerateError("dissipator with A = B = 0");
  return 2.0 * a.cross(b) / weight;
}

double bloch_entropy(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                     const BlochVector& p) {
  const double ap = a.dot(p);
  const double bp = b.dot(p);
  return 2.0 * a.cross(b).dot(p) -
         0.5 * p.squaredNorm() * (a.squaredNorm() + b.squaredNorm()) +
         0.5 * ap * ap + 0.5 * bp * bp;
}

Eigen::Vector3d gradient_rhs(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                             const BlochVector& p) {
  return 2.0 * a.cross(b) - p * (a.squaredNorm() + b.squaredNorm()) +
         a.dot(p) * a + b.dot(p) * b;
}

const Dissipator& gradient_dissipator(const LindbladChannel& ch) {
  if (!ch.h.isZero(0.0)) {
    throw GradientFormUnavailable(
        "gradient form unavailable: channel has a Hamiltonian term h != 0");
  }
  if (ch.dissipators.size() != 1) {
    throw GradientFormUnavailable(
        "gradient form unavailable: channel has " +
        std::to_string(ch.dissipators.size()) + " dissipators, expected 1");
  }
  return ch.dissipators.front();
}

SixState embed_six(const BlochVector& p) {
  return {(1 + p.x()) / 2, (1 - p.x()) / 2, (1 + p.y()) / 2,
          (1 - p.y()) / 2, (1 + p.z()) / 2, (1 - p.z()) / 2};
}

BlochVector extract_bloch(const SixState& s) {
  return {s[0] - s[1], s[2] - s[3], s[4] - s[5]};
}

std::array<double, 6> qt_six_rhs(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                 const SixState& s, double norm) {
  const Eigen::Vector3d g = gradient_rhs(a, b, extract_bloch(s));
  const Eigen::VectorXd out = multilinear::six_slot_main_term(g, s, norm);
  return {out[0], out[1], out[2], out[3], out[4], out[5]};
}

}  // namespace qtk::lindblad
