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


// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qtk/composite.hpp"
#include "qtk/dynamics.hpp"
#include "qtk/lindblad.hpp"
#include "qtk/multilinear.hpp"
#include "qtk/pme.hpp"
#include "qtk/qtfit.hpp"
#include "qtk/relaxation.hpp"
#include "qtk/three_state.hpp"

using namespace qtk;
using qtk::testing::Rng;
using V3 = Eigen::Vector3d;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

ThreeStateRates random_rates(Rng& rng) {
  return {rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
}

ThreeStateRates omega_zero(ThreeStateRates r) {
  const double scale = (r.a + r.d + r.e) / (r.b + r.c + r.f);
  r.b *= scale;
  r.c *= scale;
  r.f *= scale;
  return r;
}

V3 ball_point(Rng& rng) {
  V3 p = rng.vector(3);
  while (p.norm() > 1.0) p = rng.vector(3);
  return p;
}

Outcome c1_two_state_stationary() {
  Rng rng(101);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double w12 = rng.uniform(0.01, 10), w21 = rng.uniform(0.01, 10);
    const Eigen::VectorXd p = pme::stationary_state(pme::TransitionMatrix::two_state(w12, w21));
    worst = std::max({worst, std::abs(p[0] - w12 / (w12 + w21)), std::abs(p[1] - w21 / (w12 + w21))});
  }
  return {worst < 1e-10, "max error " + fmt("%.3g", worst)};
}

Outcome c2_fit_round_trip() {
  Rng rng(102);
  double worst = 0.0;
  int failures = 0;
  bool counts = true;
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index n = 2 + t % 4;
    const pme::TransitionMatrix w(rng.rates(n, 0.01, 1.0));
    qtfit::FitOptions opts;
    opts.seed = static_cast<std::uint64_t>(t);
    try {
      const auto rep = qtfit::fit(w, opts);
      counts = counts && rep.parameter_count() == static_cast<std::size_t>(n * (n - 1));
      for (int k = 0; k < 20; ++k) {
        const Eigen::VectorXd p = rng.simplex(n);
        worst = std::max(worst, (qtfit::qt_rhs(rep, p) - pme::pme_rhs(w, p)).cwiseAbs().maxCoeff());
      }
    } catch (const qtfit::FitNonConvergence&) {
      ++failures;
    }
  }
  return {failures == 0 && worst < 1e-8 && counts,
          "200 fits, " + std::to_string(failures) + " non-converged, max residual " +
              fmt("%.3g", worst) + (counts ? ", counts N(N-1)" : ", COUNT MISMATCH")};
}

Outcome c3_three_state_r() {
  Rng rng(103);
  double worst = 0.0, signed_worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto r = random_rates(rng);
    const auto rep = qtfit::fit(r.to_transition_matrix());
    const auto kr = qtfit::three_state_kappa_r(r);
    worst = std::max(worst, std::abs(std::abs(rep.r[0]) - std::abs(1 - kr.kappa) / (1 + kr.kappa)));
    signed_worst = std::max(signed_worst, std::abs(rep.r[0] - kr.r));
  }
  return {worst < 1e-8, "max | |r| - |1-k|/(1+k) | = " + fmt("%.3g", worst) +
                            ", signed error " + fmt("%.3g", signed_worst)};
}

Outcome c4_levi_civita() {
  Rng rng(104);
  double worst = 0.0;
  for (int n = 3; n <= 6; ++n) {
    for (int t = 0; t < 100; ++t) {
      const Eigen::VectorXd g = rng.vector(n);
      worst = std::max(worst, (multilinear::main_term_bruteforce(g) - multilinear::main_term_closed(g))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
  }
  const double n4 = multilinear::normalizer(4);
  const double eight = 8 * n4 * n4;
  return {worst < 1e-12 && std::abs(eight - 1) < 1e-15,
          "max error " + fmt("%.3g", worst) + ", 8N^2 = " + fmt("%.17g", eight)};
}

Outcome c5_relaxation_classifier() {
  Rng rng(105);
  long disagreements = 0, banded = 0;
  double identity = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const auto r = random_rates(rng);
    const auto rep = relaxation::classify(r);
    identity = std::max(identity, relaxation::disc_identity_error(rep));
    if (rep.boundary) {
      ++banded;
      continue;
    }
    const auto spec = pme::spectrum(r.to_transition_matrix());
    bool real = true;
    for (const auto& z : spec.eigenvalues) real = real && std::abs(z.imag()) < 1e-9;
    if (real != rep.monotonic) ++disagreements;
  }
  long omega_fail = 0;
  for (int t = 0; t < 10000; ++t) {
    if (!relaxation::classify(omega_zero(random_rates(rng))).monotonic) ++omega_fail;
  }
  return {disagreements == 0 && identity <= 1e-9 && omega_fail == 0,
          std::to_string(disagreements) + " oracle disagreements (" + std::to_string(banded) +
              " in band), identity error " + fmt("%.3g", identity) + ", " +
              std::to_string(omega_fail) + "/10000 omega=0 oscillatory"};
}

Outcome c6_oscillation_witness() {
  const ThreeStateRates cyc{1, 0, 0, 1, 1, 0};
  const auto spec = pme::spectrum(cyc.to_transition_matrix());
  const std::complex<double> hi(-1.5, std::sqrt(3.0) / 2.0);
  double eig = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j || i == spec.zero_mode || j == spec.zero_mode) continue;
      eig = std::min(eig, std::max(std::abs(spec.eigenvalues[i] - hi),
                                   std::abs(spec.eigenvalues[j] - std::conj(hi))));
    }
  }
  const auto w = cyc.to_transition_matrix();
  const Eigen::MatrixXd l = pme::build_generator(w);
  const auto traj = dynamics::integrate(
      [&l](const Eigen::VectorXd& p) { return Eigen::VectorXd(l * p); }, Eigen::Vector3d(1, 0, 0),
      20.0, 1e-3);
  bool non_monotone = false;
  for (const auto& c : dynamics::monotonicity_witness(traj, pme::stationary_state(w)))
    non_monotone = non_monotone || !c.monotone;
  const auto ones = relaxation::secular({1, 1, 1, 1, 1, 1});
  const double rep_err = std::max(std::abs(ones.roots[0] + 3.0), std::abs(ones.roots[1] + 3.0));
  return {eig < 1e-10 && non_monotone && rep_err < 1e-12,
          "eigenvalue error " + fmt("%.3g", eig) +
              (non_monotone ? ", non-monotone component found" : ", no non-monotone component") +
              ", all-ones root error " + fmt("%.3g", rep_err)};
}

Outcome c7_lindblad_gradient() {
  Rng rng(107);
  double analytic = 0.0, fd = 0.0, pure = 0.0;
  for (int t = 0; t < 100; ++t) {
    const V3 a = rng.vector(3), b = rng.vector(3), p = ball_point(rng);
    lindblad::LindbladChannel ch;
    ch.dissipators.push_back({a, b});
    const V3 flow = lindblad::bloch_rhs(ch, p);
    analytic = std::max(analytic, (flow - lindblad::gradient_rhs(a, b, p)).cwiseAbs().maxCoeff());
    const Eigen::VectorXd num = testing::fd_gradient(
        [&](const Eigen::VectorXd& x) { return lindblad::bloch_entropy(a, b, V3(x)); }, p, 1e-5);
    fd = std::max(fd, (num - Eigen::VectorXd(flow)).cwiseAbs().maxCoeff());
    const V3 bp = Eigen::AngleAxisd(rng.uniform(0, 6.3), a.normalized()) * (a.unitOrthogonal() * a.norm());
    pure = std::max(pure, std::abs(lindblad::stationary_bloch(a, bp).norm() - 1.0));
  }
  return {analytic < 1e-12 && fd < 1e-6 && pure < 1e-12,
          "analytic " + fmt("%.3g", analytic) + ", finite difference " + fmt("%.3g", fd) +
              ", | |P_st| - 1 | " + fmt("%.3g", pure)};
}

double six_error(double norm, Rng rng) {
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const V3 a = rng.vector(3), b = rng.vector(3), p = ball_point(rng);
    const auto six = lindblad::qt_six_rhs(a, b, lindblad::embed_six(p), norm);
    const V3 extracted(six[0] - six[1], six[2] - six[3], six[4] - six[5]);
    worst = std::max(worst, (extracted - lindblad::gradient_rhs(a, b, p)).cwiseAbs().maxCoeff());
  }
  return worst;
}

Outcome c8_six_variable() {
  const Rng rng(108);
  const double at_eighth = six_error(1.0 / 8.0, rng);
  const double at_calibrated = six_error(lindblad::kSixSlotNorm, rng);
  return {at_eighth < 1e-10,
          "N=1/8 error " + fmt("%.3g", at_eighth) +
              " (literal contraction gives 32N^2 = 1/2 of the gradient); N=1/sqrt(32) error " +
              fmt("%.3g", at_calibrated)};
}

Outcome c9_composite() {
  Rng rng(109);
  double lambda_rel = 0.0, flow = 0.0, sum = 0.0;
  bool q_ok = true;
  for (int t = 0; t < 100; ++t) {
    const double a = rng.uniform(0.01, 5), c = rng.uniform(0.01, 5), k = rng.uniform(0.01, 5);
    const auto sys = composite::CompositeSystem::make(a, c, k);
    lambda_rel = std::max(lambda_rel, std::abs(a * c * sys.lambda / 8 - (a + c) / 2) / ((a + c) / 2));
    q_ok = q_ok && composite::q_parameter(sys) > 1.0;
    for (int s = 0; s < 10; ++s) {
      const Eigen::Vector4d w(rng.simplex(4));
      flow = std::max(flow, composite::gradient_residual(sys, w));
      sum = std::max(sum, std::abs(composite::composite_entropy_gradient(sys, w).sum()));
    }
  }
  const double eps = std::numeric_limits<double>::epsilon();
  return {lambda_rel <= 4 * eps && flow < 1e-10 && sum < 1e-13 && q_ok,
          "lambda relation rel. error " + fmt("%.3g", lambda_rel) + ", flow " + fmt("%.3g", flow) +
              ", sum dS/dW " + fmt("%.3g", sum) + (q_ok ? ", q > 1" : ", q <= 1 found")};
}

Outcome c10_conservation() {
  Rng rng(110);
  double drift_rate = 0.0, entropy_drop = 0.0;
  auto scan = [&](const dynamics::Trajectory& traj, double t_end) {
    for (const auto& m : traj.monitors) {
      drift_rate = std::max(drift_rate, std::abs(m.sum_drift) / t_end);
      if (traj.has_entropy) entropy_drop = std::max(entropy_drop, -m.entropy_delta);
    }
  };
  const double t_end = 5.0;
  for (int t = 0; t < 40; ++t) {
    const Eigen::Index n = 2 + t % 4;
    const pme::TransitionMatrix w(rng.rates(n, 0.01, 1.0));
    const Eigen::MatrixXd l = pme::build_generator(w);
    const Eigen::VectorXd p0 = rng.simplex(n);
    scan(dynamics::integrate([&l](const Eigen::VectorXd& p) { return Eigen::VectorXd(l * p); }, p0,
                             t_end, 1e-2),
         t_end);
    const auto rep = qtfit::fit(w);
    scan(dynamics::integrate([&rep](const Eigen::VectorXd& p) { return qtfit::qt_rhs(rep, p); }, p0,
                             t_end, 1e-2,
                             [&rep](const Eigen::VectorXd& p) { return qtfit::entropy_value(rep, p); }),
         t_end);
  }
  for (int t = 0; t < 20; ++t) {
    const auto sys = composite::CompositeSystem::make(rng.uniform(0.1, 3), rng.uniform(0.1, 3));
    const Eigen::Matrix4d l = composite::composite_generator(sys);
    scan(dynamics::integrate([&l](const Eigen::VectorXd& w) { return Eigen::VectorXd(l * w); },
                             rng.simplex(4), t_end, 1e-2,
                             [&sys](const Eigen::VectorXd& w) {
                               return composite::composite_entropy(sys, Eigen::Vector4d(w));
                             }),
         t_end);
  }
  return {drift_rate < 1e-12 && entropy_drop <= 1e-9,
          "max drift per unit time " + fmt("%.3g", drift_rate) + ", max entropy decrease per step " +
              fmt("%.3g", entropy_drop)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"two-state stationary law", c1_two_state_stationary},
      {"QT fit round trip", c2_fit_round_trip},
      {"three-state r formula", c3_three_state_r},
      {"Levi-Civita oracle", c4_levi_civita},
      {"relaxation classifier", c5_relaxation_classifier},
      {"oscillation witness", c6_oscillation_witness},
      {"Lindblad gradient identity", c7_lindblad_gradient},
      {"six-variable embedding at N=1/8", c8_six_variable},
      {"composite system", c9_composite},
      {"conservation and entropy production", c10_conservation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
