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

// Quasithermodynamic (QT) representation of a Pauli master equation:
//
//   dp/dt = n^2 [ N (N-2)! (g - mean g) - sum_a r_a h^(a)(g) ],   g = q p,
//
// a dissipative term generated by the quadratic entropy S = p.q.p / 2 plus
// (N-1)(N-2)/2 entropy-conserving Hamiltonian-like terms (see
// multilinear::ham_term). With n = multilinear::normalizer(N) the first
// term is exactly the simplex projection of g.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qtk/error.hpp"
#include "qtk/multilinear.hpp"
#include "qtk/pme.hpp"
#include "qtk/three_state.hpp"

namespace qtk::qtfit {

using multilinear::hyperplane_basis;

/// S(p) = p.q.p / 2 with q symmetric; grad S = q p.
struct QuadraticEntropy {
  Eigen::MatrixXd q;

  double value(const Eigen::VectorXd& p) const { return 0.5 * p.dot(q * p); }
  Eigen::VectorXd gradient(const Eigen::VectorXd& p) const { return q * p; }
};

struct QTRepresentation {
  std::size_t n = 0;
  QuadraticEntropy entropy;
  std::vector<double> r;                 ///< one coefficient per subset
  std::vector<std::vector<int>> subsets; ///< 0-based hyperplane basis indices
  double norm = 1.0;
  double residual = 0.0;

  /// Free parameters of the representation: gauge-fixed entropy entries
  /// plus Hamiltonian-like coefficients. Always N (N - 1).
  std::size_t parameter_count() const;
};

/// All (N-3)-element subsets of {0..N-2}, lexicographic. Empty for N = 2,
/// a single empty subset for N = 3.
std::vector<std::vector<int>> ham_subsets(std::size_t n);

Eigen::VectorXd qt_rhs(const QTRepresentation& rep, const Eigen::VectorXd& p);

double entropy_value(const QTRepresentation& rep, const Eigen::VectorXd& p);

/// Max-abs difference between p -> qt_rhs(rep, p) and p -> L p on the
/// difference basis of the simplex tangent space and the simplex centroid.
double fit_residual(const QTRepresentation& rep, const pme::TransitionMatrix& w);

/// Diagonal entropy q = diag(-W21, -W12) for which the two-variable QT form
/// dp_i = eps_ik dH/dp_k {S, H} (unit normalizer, eps_12 = +1) reproduces
/// dp1/dt = W12 p2 - W21 p1.
QuadraticEntropy two_state_entropy(const pme::TransitionMatrix& w);

struct KappaR {
  double kappa;  ///< (b+c+f)/(a+d+e); +inf when a+d+e = 0
  double r;      ///< (1-kappa)/(1+kappa); -1 in the a+d+e = 0 limit
};

/// Throws DegenerateError when all six rates vanish.
KappaR three_state_kappa_r(const ThreeStateRates& rates);

struct FitOptions {
  std::uint64_t seed = 0;
  int max_restarts = 50;
  /// Start the outer search at the coefficients that solve the linearized
  /// symmetry condition (see fit()).
  bool warm_start = true;
  double tolerance = 1e-8;
};

/// Thrown when no start reaches `tolerance`; carries the best attempt.
class FitNonConvergence : public Error {
 public:
  FitNonConvergence(QTRepresentation best, const std::string& what)
      : Error(what), best_(std::move(best)) {}
  const QTRepresentation& best() const noexcept { return best_; }

 private:
  QTRepresentation best_;
};

/// Fits q and r so that qt_rhs reproduces the generator of `w`.
///
/// For fixed r the flow operator K = P - n^2 sum r_a M_a is known and q
/// enters linearly: K q = L is solved by least squares over the
/// N (N+1)/2 - 1 entries of q left after fixing the gauge q(N-1, N-1) = 0.
/// The outer Levenberg-Marquardt loop minimizes the remaining mismatch over
/// r, restarting from r = 0 and seeded perturbations in [-0.5, 0.5].
///
/// K q = L has a symmetric solution iff M - M^T = M A + A M^T for the
/// restrictions M, A of L and K - P to the hyperplane; that equation is
/// linear in r and gives the warm start.
///
/// N = 2 has no r and returns two_state_entropy with unit normalizer.
QTRepresentation fit(const pme::TransitionMatrix& w, const FitOptions& options = {});

}  // namespace qtk::qtfit
