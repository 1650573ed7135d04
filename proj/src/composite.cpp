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

#include "qtk/composite.hpp"

#include <cmath>

#include "qtk/error.hpp"
#include "qtk/multilinear.hpp"

namespace qtk::composite {
namespace {

double diff_a(const Eigen::Vector4d& w) { return w[0] + w[1] - w[2] - w[3]; }
double diff_b(const Eigen::Vector4d& w) { return w[0] + w[2] - w[1] - w[3]; }
double diff_ab(const Eigen::Vector4d& w) { return w[0] + w[3] - w[1] - w[2]; }

}  // namespace

CompositeSystem CompositeSystem::make(double a, double c, double k) {
  CompositeSystem sys{a, c, lambda_star(a, c), k};
  sys.validate();
  return sys;
}

void CompositeSystem::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw InputError("composite rate a must be positive");
  if (!(c > 0.0) || !std::isfinite(c)) throw InputError("composite rate c must be positive");
  if (!(boltzmann_k > 0.0) || !std::isfinite(boltzmann_k)) {
    throw InputError("Boltzmann constant k must be positive");
  }
  if (!std::isfinite(lambda)) throw InputError("lambda is not finite");
}

double lambda_star(double a, double c) {
  if (a < 0.0 || c < 0.0) throw InputError("lambda_star: negative rate");
  if (a == 0.0 || c == 0.0) throw DegenerateError("lambda_star: zero rate");
  return 4.0 * (a + c) / (a * c);
}

Eigen::Matrix4d composite_generator(const CompositeSystem& sys) {
  const double a = sys.a, c = sys.c, s = -(a + c);
  Eigen::Matrix4d l;
  // clang-format off
  l << s, c, a, 0,
       c, s, 0, a,
       a, 0, s, c,
       0, a, c, s;
  // clang-format on
  return l;
}

Eigen::Vector4d product_state(double p1, double q1) {
  const double p2 = 1.0 - p1, q2 = 1.0 - q1;
  return {p1 * q1, p1 * q2, p2 * q1, p2 * q2};
}

std::pair<double, double> subsystem_entropies(const CompositeSystem& sys,
                                              const Eigen::Vector4d& w) {
  const double x = diff_a(w), y = diff_b(w);
  return {-sys.a / 4.0 * x * x, -sys.c / 4.0 * y * y};
}

double composite_entropy(const CompositeSystem& sys, const Eigen::Vector4d& w) {
  const auto [sa, sb] = subsystem_entropies(sys, w);
  const double z = diff_ab(w);
  return sa + sb - sys.lambda * sys.a * sys.c / 16.0 * z * z;
}

Eigen::Vector4d composite_entropy_gradient(const CompositeSystem& sys,
                                           const Eigen::Vector4d& w) {
  const Eigen::Vector4d dx(1, 1, -1, -1), dy(1, -1, 1, -1), dz(1, -1, -1, 1);
  return -sys.a / 2.0 * diff_a(w) * dx - sys.c / 2.0 * diff_b(w) * dy -
         sys.lambda * sys.a * sys.c / 8.0 * diff_ab(w) * dz;
}

double q_parameter(const CompositeSystem& sys) {
  return 1.0 + sys.boltzmann_k * (sys.a + sys.c) / 4.0;
}

double tsallis_coupling(const CompositeSystem& sys) {
  return (1.0 - q_parameter(sys)) / sys.boltzmann_k;
}

double gradient_residual(const CompositeSystem& sys, const Eigen::Vector4d& w) {
  const Eigen::VectorXd grad = composite_entropy_gradient(sys, w);
  const Eigen::VectorXd flow = multilinear::main_term_bruteforce(grad);
  const Eigen::Vector4d pme = composite_generator(sys) * w;
  return (flow - Eigen::VectorXd(pme)).cwiseAbs().maxCoeff();
}

}  // namespace qtk::composite
