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

// Pauli master equation dP_i/dt = sum_k (W_ik P_k - P_i W_ki).

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qtk::pme {

/// Transition rates W_ik (|k> -> |i>, per unit time). Off-diagonal entries
/// are finite and non-negative; the diagonal is stored as zero.
class TransitionMatrix {
 public:
  /// Validates and copies `w`; the diagonal of `w` is ignored.
  explicit TransitionMatrix(const Eigen::MatrixXd& w);

  /// Two-state rates: W12 (2 -> 1) and W21 (1 -> 2).
  static TransitionMatrix two_state(double w12, double w21);

  std::size_t n() const noexcept { return static_cast<std::size_t>(w_.rows()); }
  double operator()(std::size_t i, std::size_t k) const { return w_(i, k); }
  const Eigen::MatrixXd& rates() const noexcept { return w_; }

 private:
  Eigen::MatrixXd w_;
};

/// Tolerances of a probability vector: entries >= -kNegTol, |sum - 1| <= kSumTol.
inline constexpr double kNegTol = 1e-12;
inline constexpr double kSumTol = 1e-9;

/// Throws InputError unless `p` is a probability vector of size `n`.
void check_probability(const Eigen::VectorXd& p, std::size_t n);

/// Generator L with L(i,k) = W_ik and L(i,i) = -sum_{k != i} W_ki. Columns
/// sum to zero.
Eigen::MatrixXd build_generator(const TransitionMatrix& w);

/// L p. Components sum to zero up to rounding.
Eigen::VectorXd pme_rhs(const TransitionMatrix& w, const Eigen::VectorXd& p);

/// Normalized non-negative kernel vector of L. Throws ReducibleChainError
/// when the kernel has more than one dimension.
Eigen::VectorXd stationary_state(const TransitionMatrix& w);

struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;  ///< real part descending
  std::size_t zero_mode = 0;                      ///< index of min |lambda|
};

Spectrum spectrum(const TransitionMatrix& w);

struct SymmetryFlags {
  bool symmetric = false;
  bool doubly_stochastic = false;
};

/// Symmetric (W_ik = W_ki) and doubly stochastic (sum_k W_ik = sum_k W_ki)
/// checks, relative tolerance 1e-12.
SymmetryFlags classify_w(const TransitionMatrix& w);

/// Boltzmann-Shannon entropy -sum p ln p with 0 ln 0 = 0.
double bs_entropy(const Eigen::VectorXd& p);

}  // namespace qtk::pme
