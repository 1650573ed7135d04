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

// Two independent two-state subsystems A (rates a = b) and B (rates c = d)
// viewed as one four-state chain with W1 = p1 q1, W2 = p1 q2, W3 = p2 q1,
// W4 = p2 q2, and its subextensive entropy S = S_A + S_B - lambda S_A S_B.

#include <utility>

#include <Eigen/Dense>

namespace qtk::composite {

struct CompositeSystem {
  double a = 1.0;            ///< subsystem A rate
  double c = 1.0;            ///< subsystem B rate
  double lambda = 8.0;       ///< entropy coupling
  double boltzmann_k = 1.0;

  /// a, c > 0, k > 0; lambda = lambda_star(a, c).
  static CompositeSystem make(double a, double c, double k = 1.0);
  void validate() const;
};

/// lambda with a c lambda / 8 = (a + c) / 2, i.e. 4 (a + c) / (a c).
/// Throws DegenerateError when a or c is zero, InputError when negative.
double lambda_star(double a, double c);

/// Rows: dW1 = -(a+c) W1 + c W2 + a W3, ... (columns sum to zero).
Eigen::Matrix4d composite_generator(const CompositeSystem& sys);

/// Product state (p1, 1-p1) x (q1, 1-q1).
Eigen::Vector4d product_state(double p1, double q1);

/// (S_A, S_B) = (-(a/4)(W1+W2-W3-W4)^2, -(c/4)(W1+W3-W2-W4)^2).
std::pair<double, double> subsystem_entropies(const CompositeSystem& sys,
                                              const Eigen::Vector4d& w);

/// S_A + S_B - lambda (a c / 16)(W1+W4-W2-W3)^2.
double composite_entropy(const CompositeSystem& sys, const Eigen::Vector4d& w);
Eigen::Vector4d composite_entropy_gradient(const CompositeSystem& sys,
                                           const Eigen::Vector4d& w);

/// Nonextensivity q = 1 + k (a + c) / 4.
double q_parameter(const CompositeSystem& sys);

/// Coupling implied by q in S_A + S_B + ((1-q)/k) S_A S_B; equals
/// -(a + c)/4, which matches -lambda_star only when a c = 16.
double tsallis_coupling(const CompositeSystem& sys);

/// max_i |main_term_bruteforce(grad S, 4)_i - (L W)_i| at the default
/// four-state normalizer (8 n^2 = 1).
double gradient_residual(const CompositeSystem& sys, const Eigen::Vector4d& w);

}  // namespace qtk::composite
