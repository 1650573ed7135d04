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

// Fixed-step classical Runge-Kutta integration with invariant monitoring.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace qtk::dynamics {

using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using EntropyFn = std::function<double(const Eigen::VectorXd&)>;

struct Monitor {
  double sum_drift = 0;      ///< sum(y) - sum(y0)
  double entropy = 0;        ///< NaN without an entropy evaluator
  double entropy_delta = 0;  ///< change since the previous sample
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  std::vector<Monitor> monitors;
  bool has_entropy = false;

  const Eigen::VectorXd& final_state() const { return states.back(); }
  std::size_t size() const { return times.size(); }
};

/// Step 1e-3 / max_rate, the default resolution of a flow whose fastest
/// rate is `max_rate`.
double default_step(double max_rate);

/// Integrates dy/dt = rhs(y) from t = 0 to t_end with step dt; the final
/// step is shortened so the last sample sits exactly at t_end. Throws
/// InputError for bad arguments and DivergenceError (with the step index)
/// when the state becomes non-finite.
Trajectory integrate(const VectorField& rhs, const Eigen::VectorXd& y0, double t_end,
                     double dt, const EntropyFn& entropy = {});

struct ComponentWitness {
  /// Deviation y_i - y_i^st changes sign at most dim - 2 times, the bound
  /// for a sum of dim - 1 real exponentials. False for oscillatory decay.
  bool monotone = true;
  /// |y_i - y_i^st| never grows by more than the tolerance.
  bool distance_nonincreasing = true;
  int sign_changes = 0;
};

/// Per-component relaxation witness. Deviations within `tol` of zero carry
/// no sign. Throws InconclusiveError unless the final state is within 1e-6
/// of `stationary`.
std::vector<ComponentWitness> monotonicity_witness(const Trajectory& traj,
                                                   const Eigen::VectorXd& stationary,
                                                   double tol = 1e-9);

/// CSV `t,y1,...,yN,entropy,sum_drift`, every `stride`-th sample plus the
/// final one.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, std::size_t stride,
                          int precision);

}  // namespace qtk::dynamics
