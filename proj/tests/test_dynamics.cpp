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


#include <cmath>
#include <sstream>
#include <string>

#include <doctest.h>

#include "oracles.hpp"
#include "qtk/dynamics.hpp"
#include "qtk/error.hpp"
#include "qtk/pme.hpp"
#include "qtk/three_state.hpp"

using namespace qtk;
using namespace qtk::dynamics;
using qtk::testing::Rng;

namespace {

VectorField linear(const Eigen::MatrixXd& l) {
  return [l](const Eigen::VectorXd& y) { return Eigen::VectorXd(l * y); };
}

Trajectory relax(const pme::TransitionMatrix& w, const Eigen::VectorXd& p0, double t_end,
                 double dt) {
  return integrate(linear(pme::build_generator(w)), p0, t_end, dt);
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("two-state relaxation reaches the stationary law") {
  const auto w = pme::TransitionMatrix::two_state(2, 1);
  const auto traj = relax(w, Eigen::Vector2d(0, 1), 20.0, 1e-3);
  CHECK(traj.times.back() == 20.0);
  CHECK(std::abs(traj.final_state()[0] - 2.0 / 3.0) < 1e-8);
  CHECK(std::abs(traj.final_state()[1] - 1.0 / 3.0) < 1e-8);
  // Exact solution p1(t) = 2/3 - (2/3) exp(-3 t).
  const std::size_t mid = traj.size() / 2;
  CHECK(traj.states[mid][0] ==
        doctest::Approx(2.0 / 3.0 * (1 - std::exp(-3 * traj.times[mid]))).epsilon(1e-12));
}

TEST_CASE("zero field keeps the state") {
  const Eigen::Vector3d y0(0.2, 0.3, 0.5);
  const auto traj =
      integrate([](const Eigen::VectorXd& y) { return Eigen::VectorXd::Zero(y.size()); },
                y0, 1.0, 0.1);
  for (const auto& s : traj.states) CHECK(s == Eigen::VectorXd(y0));
}

TEST_CASE("final step is truncated onto t_end") {
  const auto traj =
      integrate([](const Eigen::VectorXd& y) { return Eigen::VectorXd(-y); },
                Eigen::VectorXd::Ones(1), 1.05, 0.1);
  CHECK(traj.size() == 12);
  CHECK(traj.times.back() == 1.05);
  for (std::size_t k = 1; k < traj.size(); ++k) CHECK(traj.times[k] > traj.times[k - 1]);
  CHECK(traj.final_state()[0] == doctest::Approx(std::exp(-1.05)).epsilon(1e-6));
}

TEST_CASE("fourth-order convergence") {
  const Eigen::MatrixXd l = pme::build_generator(ThreeStateRates{1, 0, 0, 1, 1, 0}.to_transition_matrix());
  const Eigen::Vector3d p0(1, 0, 0);
  // Exact propagator via the matrix exponential oracle (eigendecomposition).
  Eigen::EigenSolver<Eigen::MatrixXd> es(l);
  const Eigen::MatrixXcd v = es.eigenvectors();
  const Eigen::VectorXcd lam = es.eigenvalues();
  const double t = 2.0;
  const Eigen::VectorXcd coeff = v.partialPivLu().solve(p0.cast<std::complex<double>>());
  const Eigen::VectorXd exact = (v * (lam * t).array().exp().matrix().cwiseProduct(coeff)).real();
  const double e1 = (integrate(linear(l), p0, t, 0.1).final_state() - exact).norm();
  const double e2 = (integrate(linear(l), p0, t, 0.05).final_state() - exact).norm();
  const double order = std::log2(e1 / e2);
  CHECK(order >= 3.5);
}

TEST_CASE("conservation drift stays below 1e-12 per unit time") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Eigen::Index>(2 + trial % 5);
    const pme::TransitionMatrix w(rng.rates(n, 0.0, 2.0));
    const double t_end = 5.0;
    const auto traj = relax(w, rng.simplex(n), t_end, 1e-2);
    for (const auto& m : traj.monitors) CHECK(std::abs(m.sum_drift) < 1e-12 * t_end);
  }
}

TEST_CASE("entropy monitors") {
  const auto w = pme::TransitionMatrix::two_state(1, 1);
  const auto traj = integrate(linear(pme::build_generator(w)), Eigen::Vector2d(0.9, 0.1), 1.0,
                              0.01, pme::bs_entropy);
  CHECK(traj.has_entropy);
  CHECK(traj.monitors.front().entropy_delta == 0.0);
  for (std::size_t k = 1; k < traj.size(); ++k) {
    CHECK(traj.monitors[k].entropy_delta ==
          doctest::Approx(traj.monitors[k].entropy - traj.monitors[k - 1].entropy));
  }
  const auto plain = relax(w, Eigen::Vector2d(0.9, 0.1), 1.0, 0.01);
  CHECK_FALSE(plain.has_entropy);
  CHECK(std::isnan(plain.monitors.back().entropy));
}

TEST_CASE("integration errors") {
  const VectorField id = [](const Eigen::VectorXd& y) { return y; };
  CHECK_THROWS_AS(integrate(id, Eigen::VectorXd::Ones(2), 1.0, 0.0), InputError);
  CHECK_THROWS_AS(integrate(id, Eigen::VectorXd::Ones(2), -1.0, 0.1), InputError);
  CHECK_THROWS_AS(
      integrate([](const Eigen::VectorXd&) { return Eigen::VectorXd::Ones(3); },
                Eigen::VectorXd::Ones(2), 1.0, 0.1),
      InputError);
  try {
    integrate([](const Eigen::VectorXd& y) { return Eigen::VectorXd(y.array().square() * 1e300); },
              Eigen::VectorXd::Constant(1, 10.0), 1.0, 0.1);
    FAIL("expected DivergenceError");
  } catch (const DivergenceError& e) {
    CHECK(e.step() >= 1);
  }
  CHECK(default_step(4.0) == 2.5e-4);
  CHECK_THROWS_AS(default_step(0.0), InputError);
}

TEST_CASE("witness: cyclic rates oscillate") {
  const auto w = ThreeStateRates{1, 0, 0, 1, 1, 0}.to_transition_matrix();
  const auto traj = relax(w, Eigen::Vector3d(1, 0, 0), 20.0, 1e-3);
  const auto wit = monotonicity_witness(traj, pme::stationary_state(w));
  CHECK(wit[0].sign_changes >= 2);
  bool any_non_monotone = false;
  for (const auto& c : wit) any_non_monotone = any_non_monotone || !c.monotone;
  CHECK(any_non_monotone);
}

TEST_CASE("witness: omega = 0 relaxes monotonically") {
  Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    ThreeStateRates r{rng.uniform(0.2, 1), rng.uniform(0.2, 1), rng.uniform(0.2, 1),
                      rng.uniform(0.2, 1), rng.uniform(0.2, 1), rng.uniform(0.2, 1)};
    const double scale = (r.a + r.d + r.e) / (r.b + r.c + r.f);
    r.b *= scale;
    r.c *= scale;
    r.f *= scale;
    const auto w = r.to_transition_matrix();
    const auto traj = relax(w, rng.simplex(3), 40.0, 1e-2);
    for (const auto& c : monotonicity_witness(traj, pme::stationary_state(w))) {
      CHECK(c.monotone);
      CHECK(c.sign_changes <= 1);
    }
  }
}

TEST_CASE("witness: two-state chains never oscillate") {
  Rng rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = pme::TransitionMatrix::two_state(rng.uniform(0.2, 2), rng.uniform(0.2, 2));
    const auto traj = relax(w, rng.simplex(2), 20.0, 1e-2);
    for (const auto& c : monotonicity_witness(traj, pme::stationary_state(w))) {
      CHECK(c.monotone);
      CHECK(c.distance_nonincreasing);
      CHECK(c.sign_changes == 0);
    }
  }
}

TEST_CASE("witness needs a converged trajectory") {
  const auto w = pme::TransitionMatrix::two_state(1, 1);
  const auto traj = relax(w, Eigen::Vector2d(1, 0), 0.5, 1e-2);
  CHECK_THROWS_AS(monotonicity_witness(traj, pme::stationary_state(w)), InconclusiveError);
}

TEST_CASE("trajectory CSV layout") {
  const auto w = pme::TransitionMatrix::two_state(1, 1);
  const auto traj = integrate(linear(pme::build_generator(w)), Eigen::Vector2d(1, 0), 1.05, 0.1,
                              pme::bs_entropy);
  std::ostringstream out;
  write_trajectory_csv(out, traj, 5, 17);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,y1,y2,entropy,sum_drift");
  int rows = 0;
  std::string last;
  while (std::getline(in, line)) {
    ++rows;
    last = line;
  }
  CHECK(rows == 4);  // samples 0, 5, 10 and the final one (11)
  CHECK(last.rfind("1.05,", 0) == 0);
  CHECK_THROWS_AS(write_trajectory_csv(out, traj, 0, 17), InputError);
}

}  // TEST_SUITE
