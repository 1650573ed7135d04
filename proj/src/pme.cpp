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

#include "qtk/pme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qtk/error.hpp"

namespace qtk::pme {
namespace {

// Neumaier-compensated sum.
template <typename Range>
double compensated_sum(const Range& xs) {
  double sum = 0.0;
  double c = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    c += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + c;
}

bool close_rel(double x, double y, double scale) {
  return std::abs(x - y) <= 1e-12 * std::max(1.0, scale);
}

}  // namespace

TransitionMatrix::TransitionMatrix(const Eigen::MatrixXd& w) : w_(w) {
  if (w_.rows() != w_.cols()) {
    throw InputError("transition matrix must be square, got " +
                     std::to_string(w_.rows()) + "x" + std::to_string(w_.cols()));
  }
  if (w_.rows() < 2) throw InputError("transition matrix needs at least 2 states");
  for (Eigen::Index i = 0; i < w_.rows(); ++i) {
    w_(i, i) = 0.0;
    for (Eigen::Index k = 0; k < w_.cols(); ++k) {
      if (!std::isfinite(w_(i, k))) {
        throw InputError("rate W[" + std::to_string(i) + "][" +
                         std::to_string(k) + "] is not finite");
      }
      if (w_(i, k) < 0.0) {
        throw InputError("rate W[" + std::to_string(i) + "][" +
                         std::to_string(k) + "] is negative");
      }
    }
  }
}

TransitionMatrix TransitionMatrix::two_state(double w12, double w21) {
  Eigen::Matrix2d w;
  w << 0.0, w12, w21, 0.0;
  return TransitionMatrix(w);
}

void check_probability(const Eigen::VectorXd& p, std::size_t n) {
  if (static_cast<std::size_t>(p.size()) != n) {
    throw InputError("state has " + std::to_string(p.size()) +
                     " entries, expected " + std::to_string(n));
  }
  if (!p.allFinite()) throw InputError("state has non-finite entries");
  if (p.minCoeff() < -kNegTol) throw InputError("state has negative probabilities");
  if (std::abs(p.sum() - 1.0) > kSumTol) {
    throw InputError("probabilities do not sum to 1");
  }
}

Eigen::MatrixXd build_generator(const TransitionMatrix& w) {
  const auto n = static_cast<Eigen::Index>(w.n());
  Eigen::MatrixXd l = w.rates();
  std::vector<double> column(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) column[i] = (i == k) ? 0.0 : l(i, k);
    l(k, k) = -compensated_sum(column);
  }
  return l;
}

Eigen::VectorXd pme_rhs(const TransitionMatrix& w, const Eigen::VectorXd& p) {
  if (static_cast<std::size_t>(p.size()) != w.n()) {
    throw InputError("pme_rhs: state has " + std::to_string(p.size()) +
                     " entries, generator is " + std::to_string(w.n()) + "x" +
                     std::to_string(w.n()));
  }
  return build_generator(w) * p;
}

Eigen::VectorXd stationary_state(const TransitionMatrix& w) {
  const Eigen::MatrixXd l = build_generator(w);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(l, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double threshold = 1e-10 * sv[0];
  const auto kernel_dim = static_cast<std::size_t>(
      (sv.array() <= threshold).count());
  if (kernel_dim != 1) {
    throw ReducibleChainError(
        kernel_dim, "generator kernel has dimension " +
                        std::to_string(kernel_dim) +
                        "; the chain has no unique stationary state");
  }
  Eigen::VectorXd p = svd.matrixV().col(l.cols() - 1);
  p /= p.sum();
  if (p.minCoeff() < -1e-10) {
    throw ReducibleChainError(1, "kernel vector has negative entries");
  }
  p = p.cwiseMax(0.0);
  return p / p.sum();
}

Spectrum spectrum(const TransitionMatrix& w) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(build_generator(w), false);
  Spectrum s;
  const auto& ev = solver.eigenvalues();
  s.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::stable_sort(s.eigenvalues.begin(), s.eigenvalues.end(),
                   [](const auto& x, const auto& y) {
                     if (x.real() != y.real()) return x.real() > y.real();
                     return x.imag() > y.imag();
                   });
  s.zero_mode = static_cast<std::size_t>(
      std::min_element(s.eigenvalues.begin(), s.eigenvalues.end(),
                       [](const auto& x, const auto& y) {
                         return std::abs(x) < std::abs(y);
                       }) -
      s.eigenvalues.begin());
  return s;
}

SymmetryFlags classify_w(const TransitionMatrix& w) {
  const Eigen::MatrixXd& r = w.rates();
  const double scale = r.cwiseAbs().maxCoeff();
  SymmetryFlags flags;
  flags.symmetric = true;
  for (Eigen::Index i = 0; i < r.rows() && flags.symmetric; ++i) {
    for (Eigen::Index k = i + 1; k < r.cols(); ++k) {
      if (!close_rel(r(i, k), r(k, i), scale)) {
        flags.symmetric = false;
        break;
      }
    }
  }
  flags.doubly_stochastic = true;
  const double sum_scale = scale * static_cast<double>(r.rows());
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    if (!close_rel(r.row(i).sum(), r.col(i).sum(), sum_scale)) {
      flags.doubly_stochastic = false;
      break;
    }
  }
  return flags;
}

double bs_entropy(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

}  // namespace qtk::pme
