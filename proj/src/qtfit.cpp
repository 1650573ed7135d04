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

#include "qtk/qtfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/QR>

namespace qtk::qtfit {
namespace {

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

void require_dim(const QTRepresentation& rep, const Eigen::VectorXd& p) {
  if (static_cast<std::size_t>(p.size()) != rep.n) {
    throw InputError("state has " + std::to_string(p.size()) +
                     " entries, representation has N = " + std::to_string(rep.n));
  }
}

// Entries (a, b), a <= b, of a symmetric matrix with the gauge entry
// (N-1, N-1) removed.
std::vector<std::pair<Eigen::Index, Eigen::Index>> entropy_unknowns(Eigen::Index n) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      if (a == n - 1 && b == n - 1) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

// Outer problem for fixed generator: r -> (K(r), best q, mismatch K q - L).
class FitProblem {
 public:
  FitProblem(const Eigen::MatrixXd& generator, std::vector<std::vector<int>> subsets)
      : l_(generator),
        n_(generator.rows()),
        subsets_(std::move(subsets)),
        norm_(multilinear::normalizer(static_cast<std::size_t>(n_))),
        unknowns_(entropy_unknowns(n_)) {
    projector_ = Eigen::MatrixXd::Identity(n_, n_) -
                 Eigen::MatrixXd::Constant(n_, n_, 1.0 / static_cast<double>(n_));
    for (const auto& s : subsets_) {
      ham_.push_back(multilinear::ham_matrix(static_cast<std::size_t>(n_), s));
    }
    test_vectors_.resize(n_, n_);
    test_vectors_.leftCols(n_ - 1) = hyperplane_basis(static_cast<std::size_t>(n_));
    test_vectors_.col(n_ - 1).setConstant(1.0 / static_cast<double>(n_));
  }

  std::size_t num_r() const { return subsets_.size(); }
  std::size_t num_entropy() const { return unknowns_.size(); }
  double norm() const { return norm_; }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }

  Eigen::MatrixXd flow_operator(const Eigen::VectorXd& r) const {
    Eigen::MatrixXd k = projector_;
    for (std::size_t a = 0; a < ham_.size(); ++a) {
      k -= norm_ * norm_ * r[static_cast<Eigen::Index>(a)] * ham_[a];
    }
    return k;
  }

  // Least-squares q for K q = L in the gauge-fixed parameterization.
  Eigen::MatrixXd solve_entropy(const Eigen::MatrixXd& k) const {
    const auto m = static_cast<Eigen::Index>(unknowns_.size());
    Eigen::MatrixXd design(n_ * n_, m);
    Eigen::MatrixXd ke(n_, n_);
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto [a, b] = unknowns_[static_cast<std::size_t>(j)];
      ke.setZero();
      ke.col(b) = k.col(a);
      if (a != b) ke.col(a) = k.col(b);
      design.col(j) = flatten(ke);
    }
    const Eigen::VectorXd x = design.colPivHouseholderQr().solve(flatten(l_));
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n_, n_);
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto [a, b] = unknowns_[static_cast<std::size_t>(j)];
      q(a, b) = x[j];
      q(b, a) = x[j];
    }
    return q;
  }

  Eigen::MatrixXd mismatch(const Eigen::VectorXd& r, Eigen::MatrixXd* q_out = nullptr) const {
    const Eigen::MatrixXd k = flow_operator(r);
    Eigen::MatrixXd q = solve_entropy(k);
    Eigen::MatrixXd diff = k * q - l_;
    if (q_out) *q_out = std::move(q);
    return diff;
  }

  double metric(const Eigen::MatrixXd& diff) const {
    return (diff * test_vectors_).cwiseAbs().maxCoeff();
  }

  // Coefficients solving M - M^T = M A + A M^T with A = -n^2 sum r_a M_a.
  Eigen::VectorXd linear_start() const {
    const Eigen::MatrixXd lt = l_ * projector_;
    const auto m = static_cast<Eigen::Index>(ham_.size());
    Eigen::MatrixXd design(n_ * n_, m);
    for (Eigen::Index a = 0; a < m; ++a) {
      const Eigen::MatrixXd& h = ham_[static_cast<std::size_t>(a)];
      design.col(a) = flatten(-norm_ * norm_ * (lt * h + h * lt.transpose()));
    }
    const Eigen::MatrixXd rhs = lt - lt.transpose();
    return design.colPivHouseholderQr().solve(flatten(rhs));
  }

 private:
  Eigen::MatrixXd l_;
  Eigen::Index n_;
  std::vector<std::vector<int>> subsets_;
  double norm_;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> unknowns_;
  Eigen::MatrixXd projector_;
  std::vector<Eigen::MatrixXd> ham_;
  Eigen::MatrixXd test_vectors_;
};

struct Attempt {
  Eigen::VectorXd r;
  Eigen::MatrixXd q;
  double metric = std::numeric_limits<double>::infinity();
};

// Levenberg-Marquardt on vec(K(r) q*(r) - L) with a central-difference
// Jacobian.
Attempt minimize_from(const FitProblem& problem, Eigen::VectorXd r) {
  auto residual = [&](const Eigen::VectorXd& x) { return flatten(problem.mismatch(x)); };
  const auto m = r.size();
  Eigen::VectorXd f = residual(r);
  double cost = f.squaredNorm();
  double mu = 1e-3;

  for (int iter = 0; iter < 200 && cost > 1e-30; ++iter) {
    Eigen::MatrixXd jac(f.size(), m);
    for (Eigen::Index j = 0; j < m; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(r[j]));
      Eigen::VectorXd rp = r, rm = r;
      rp[j] += h;
      rm[j] -= h;
      jac.col(j) = (residual(rp) - residual(rm)) / (2.0 * h);
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * f;

    bool accepted = false;
    Eigen::VectorXd step;
    while (mu < 1e12) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += mu * (1.0 + jtj.diagonal().array());
      step = damped.ldlt().solve(-grad);
      const Eigen::VectorXd trial_r = r + step;
      const Eigen::VectorXd trial_f = residual(trial_r);
      const double trial_cost = trial_f.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        r = trial_r;
        f = trial_f;
        cost = trial_cost;
        mu = std::max(mu / 3.0, 1e-15);
        accepted = true;
        break;
      }
      mu *= 4.0;
    }
    if (!accepted) break;
    if (step.norm() <= 1e-15 * (1.0 + r.norm())) break;
  }

  Attempt out;
  out.r = r;
  const Eigen::MatrixXd diff = problem.mismatch(r, &out.q);
  out.metric = problem.metric(diff);
  return out;
}

QTRepresentation make_rep(const FitProblem& problem, const Attempt& a) {
  QTRepresentation rep;
  rep.n = static_cast<std::size_t>(a.q.rows());
  rep.entropy.q = a.q;
  rep.r.assign(a.r.data(), a.r.data() + a.r.size());
  rep.subsets = problem.subsets();
  rep.norm = problem.norm();
  return rep;
}

}  // namespace

std::size_t QTRepresentation::parameter_count() const {
  return n * (n + 1) / 2 - 1 + r.size();
}

std::vector<std::vector<int>> ham_subsets(std::size_t n) {
  if (n < 2) throw InputError("ham_subsets: N must be at least 2");
  std::vector<std::vector<int>> out;
  if (n == 2) return out;
  const int pool = static_cast<int>(n - 1);
  const int size = static_cast<int>(n - 3);
  std::vector<int> cur(static_cast<std::size_t>(size));
  for (int t = 0; t < size; ++t) cur[t] = t;
  while (true) {
    out.push_back(cur);
    int t = size - 1;
    while (t >= 0 && cur[t] == pool - size + t) --t;
    if (t < 0) break;
    ++cur[t];
    for (int s = t + 1; s < size; ++s) cur[s] = cur[s - 1] + 1;
  }
  return out;
}

Eigen::VectorXd qt_rhs(const QTRepresentation& rep, const Eigen::VectorXd& p) {
  require_dim(rep, p);
  if (rep.r.size() != rep.subsets.size()) {
    throw InputError("representation has mismatched r and subset counts");
  }
  const Eigen::VectorXd g = rep.entropy.gradient(p);
  const double n2 = rep.norm * rep.norm;
  const double dissipative_scale =
      n2 * static_cast<double>(rep.n) * factorial(rep.n - 2);
  Eigen::VectorXd out = dissipative_scale * multilinear::main_term_closed(g);
  for (std::size_t a = 0; a < rep.r.size(); ++a) {
    if (rep.r[a] == 0.0) continue;
    out -= n2 * rep.r[a] * multilinear::ham_term(g, rep.subsets[a]);
  }
  return out;
}

double entropy_value(const QTRepresentation& rep, const Eigen::VectorXd& p) {
  require_dim(rep, p);
  return rep.entropy.value(p);
}

double fit_residual(const QTRepresentation& rep, const pme::TransitionMatrix& w) {
  if (w.n() != rep.n) throw InputError("fit_residual: dimension mismatch");
  const Eigen::MatrixXd l = pme::build_generator(w);
  const auto n = static_cast<Eigen::Index>(rep.n);
  Eigen::MatrixXd tests(n, n);
  tests.leftCols(n - 1) = hyperplane_basis(rep.n);
  tests.col(n - 1).setConstant(1.0 / static_cast<double>(n));
  double worst = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::VectorXd x = tests.col(j);
    worst = std::max(worst, (qt_rhs(rep, x) - l * x).cwiseAbs().maxCoeff());
  }
  return worst;
}

QuadraticEntropy two_state_entropy(const pme::TransitionMatrix& w) {
  if (w.n() != 2) throw InputError("two_state_entropy requires N = 2");
  QuadraticEntropy s;
  s.q = Eigen::Matrix2d::Zero();
  s.q(0, 0) = -w(1, 0);
  s.q(1, 1) = -w(0, 1);
  return s;
}

KappaR three_state_kappa_r(const ThreeStateRates& rates) {
  const double forward = rates.a + rates.d + rates.e;
  const double backward = rates.b + rates.c + rates.f;
  if (forward == 0.0) {
    if (backward == 0.0) {
      throw DegenerateError("three_state_kappa_r: all rates vanish");
    }
    return {std::numeric_limits<double>::infinity(), -1.0};
  }
  const double kappa = backward / forward;
  return {kappa, (1.0 - kappa) / (1.0 + kappa)};
}

QTRepresentation fit(const pme::TransitionMatrix& w, const FitOptions& options) {
  const std::size_t n = w.n();
  if (n == 2) {
    QTRepresentation rep;
    rep.n = 2;
    rep.entropy = two_state_entropy(w);
    rep.norm = 1.0;
    rep.residual = fit_residual(rep, w);
    if (rep.residual > options.tolerance) {
      throw FitNonConvergence(rep, "two-state representation residual " +
                                       std::to_string(rep.residual));
    }
    return rep;
  }

  FitProblem problem(pme::build_generator(w), ham_subsets(n));
  if (problem.num_entropy() + problem.num_r() != n * (n - 1)) {
    throw std::logic_error("QT parameter count differs from N(N-1)");
  }

  const auto m = static_cast<Eigen::Index>(problem.num_r());
  std::vector<Eigen::VectorXd> starts;
  if (options.warm_start) starts.push_back(problem.linear_start());
  starts.push_back(Eigen::VectorXd::Zero(m));

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  Attempt best;
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    Eigen::VectorXd start;
    if (static_cast<std::size_t>(attempt) < starts.size()) {
      start = starts[static_cast<std::size_t>(attempt)];
    } else {
      start.resize(m);
      for (Eigen::Index j = 0; j < m; ++j) start[j] = jitter(rng);
    }
    Attempt a = minimize_from(problem, start);
    if (a.metric < best.metric) best = std::move(a);
    if (best.metric <= options.tolerance) break;
  }

  QTRepresentation rep = make_rep(problem, best);
  rep.residual = fit_residual(rep, w);
  if (!(rep.residual <= options.tolerance)) {
    throw FitNonConvergence(rep, "QT fit did not converge; best residual " +
                                     std::to_string(rep.residual));
  }
  return rep;
}

}  // namespace qtk::qtfit
