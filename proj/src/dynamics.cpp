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

#include "qtk/dynamics.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "qtk/error.hpp"

namespace qtk::dynamics {

double default_step(double max_rate) {
  if (!(max_rate > 0.0) || !std::isfinite(max_rate)) {
    throw InputError("default_step: max rate must be positive");
  }
  return 1e-3 / max_rate;
}

Trajectory integrate(const VectorField& rhs, const Eigen::VectorXd& y0, double t_end,
                     double dt, const EntropyFn& entropy) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InputError("integrate: dt must be positive");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw InputError("integrate: t_end must be positive");
  }
  if (!y0.allFinite()) throw InputError("integrate: initial state is not finite");
  {
    const Eigen::VectorXd probe = rhs(y0);
    if (probe.size() != y0.size()) {
      throw InputError("integrate: vector field returns " + std::to_string(probe.size()) +
                       " components for a state of size " + std::to_string(y0.size()));
    }
  }

  auto full_steps = static_cast<std::size_t>(std::floor(t_end / dt));
  if (static_cast<double>(full_steps) * dt > t_end) --full_steps;
  const double tail = t_end - static_cast<double>(full_steps) * dt;
  const bool truncated = tail > 1e-12 * t_end;
  if (!truncated && full_steps == 0) full_steps = 1;
  const std::size_t steps = full_steps + (truncated ? 1 : 0);

  Trajectory traj;
  traj.has_entropy = static_cast<bool>(entropy);
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.monitors.reserve(steps + 1);

  const double sum0 = y0.sum();
  auto record = [&](double t, const Eigen::VectorXd& y) {
    Monitor m;
    m.sum_drift = y.sum() - sum0;
    if (entropy) {
      m.entropy = entropy(y);
      m.entropy_delta = traj.monitors.empty() ? 0.0 : m.entropy - traj.monitors.back().entropy;
    } else {
      m.entropy = std::numeric_limits<double>::quiet_NaN();
      m.entropy_delta = std::numeric_limits<double>::quiet_NaN();
    }
    traj.times.push_back(t);
    traj.states.push_back(y);
    traj.monitors.push_back(m);
  };

  record(0.0, y0);
  Eigen::VectorXd y = y0;
  for (std::size_t k = 0; k < steps; ++k) {
    const bool last = k + 1 == steps;
    const double t0 = static_cast<double>(k) * dt;
    const double t1 = last ? t_end : static_cast<double>(k + 1) * dt;
    const double h = t1 - t0;
    const Eigen::VectorXd k1 = rhs(y);
    const Eigen::VectorXd k2 = rhs(y + 0.5 * h * k1);
    const Eigen::VectorXd k3 = rhs(y + 0.5 * h * k2);
    const Eigen::VectorXd k4 = rhs(y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!y.allFinite()) {
      throw DivergenceError(k + 1, "integration diverged at step " + std::to_string(k + 1) +
                                       " (t = " + std::to_string(t1) + ")");
    }
    record(t1, y);
  }
  return traj;
}

std::vector<ComponentWitness> monotonicity_witness(const Trajectory& traj,
                                                   const Eigen::VectorXd& stationary,
                                                   double tol) {
  if (traj.states.empty()) throw InconclusiveError("empty trajectory");
  if (stationary.size() != traj.final_state().size()) {
    throw InputError("stationary state dimension does not match the trajectory");
  }
  const double final_gap = (traj.final_state() - stationary).cwiseAbs().maxCoeff();
  if (!(final_gap < 1e-6)) {
    throw InconclusiveError("trajectory has not converged: final distance " +
                            std::to_string(final_gap));
  }
  const auto dim = stationary.size();
  const int allowed = static_cast<int>(std::max<Eigen::Index>(dim - 2, 0));
  std::vector<ComponentWitness> out(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    ComponentWitness& w = out[static_cast<std::size_t>(i)];
    int last_sign = 0;
    double prev = std::abs(traj.states.front()[i] - stationary[i]);
    for (const auto& s : traj.states) {
      const double dev = s[i] - stationary[i];
      if (std::abs(dev) > prev + tol) w.distance_nonincreasing = false;
      prev = std::abs(dev);
      if (std::abs(dev) <= tol) continue;
      const int sign = dev > 0 ? 1 : -1;
      if (last_sign != 0 && sign != last_sign) ++w.sign_changes;
      last_sign = sign;
    }
    w.monotone = w.sign_changes <= allowed;
  }
  return out;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, std::size_t stride,
                          int precision) {
  if (stride == 0) throw InputError("stride must be positive");
  const auto old = out.precision(precision);
  out << 't';
  const auto dim = traj.states.empty() ? 0 : traj.states.front().size();
  for (Eigen::Index i = 0; i < dim; ++i) out << ",y" << (i + 1);
  out << ",entropy,sum_drift\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (k % stride != 0 && k + 1 != traj.size()) continue;
    out << traj.times[k];
    for (Eigen::Index i = 0; i < dim; ++i) out << ',' << traj.states[k][i];
    out << ',' << traj.monitors[k].entropy << ',' << traj.monitors[k].sum_drift << '\n';
  }
  out.precision(old);
}

}  // namespace qtk::dynamics
