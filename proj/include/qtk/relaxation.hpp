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

// Relaxation character of a three-state chain. The nonzero eigenvalues of
// the generator solve
//
//   lambda^2 + xi lambda + eta (a+b+e) - (e-c)(f-a) = 0,
//
// so relaxation is monotone (real spectrum) iff the discriminant
// xi^2 + 4 (e-c)(f-a) - 4 eta (a+b+e) is >= 0. The discriminant equals
// (sqrt3 u + 2 omega / sqrt3)^2 + v^2 - omega^2 / 3, which is negative only
// inside an ellipse that shrinks to a point when omega = 0.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qtk/three_state.hpp"

namespace qtk::relaxation {

struct Secular {
  double xi = 0;        ///< a+b+c+d+e+f (minus the trace)
  double constant = 0;  ///< eta (a+b+e) - (e-c)(f-a)
  double disc = 0;      ///< xi^2 - 4 constant
  std::complex<double> roots[2];
};

Secular secular(const ThreeStateRates& rates);

struct RelaxationReport {
  double xi = 0, eta = 0, disc = 0;
  double k = 0, l = 0, m = 0, omega = 0, u = 0, v = 0;
  double ellipse = 0;  ///< (sqrt3 u + 2 omega/sqrt3)^2 + v^2 - omega^2/3
  std::complex<double> eigenvalues[2];
  bool monotonic = false;  ///< disc >= 0
  bool boundary = false;   ///< |disc| < 1e-9 max(1, xi^2)
};

RelaxationReport classify(const ThreeStateRates& rates);

/// |disc - (omega^2 + 4 omega (l+m) + 4 (l^2 + m^2 + l m))| / max(1, |disc|)
double disc_identity_error(const RelaxationReport& report);

struct ScanSpec {
  std::size_t samples = 0;
  double lo = 0.0;
  double hi = 1.0;
  bool omega_zero = false;  ///< rescale (b, c, f) so that omega = 0
  std::size_t bins = 10;    ///< |omega| histogram bins
  unsigned threads = 1;
};

struct ScanSample {
  ThreeStateRates rates;
  RelaxationReport report;
};

struct OmegaBin {
  double lo = 0, hi = 0;
  std::size_t count = 0;
  std::size_t oscillatory = 0;
  double fraction() const {
    return count ? static_cast<double>(oscillatory) / static_cast<double>(count) : 0.0;
  }
};

struct ScanResult {
  std::vector<ScanSample> samples;  ///< in generation order
  std::vector<OmegaBin> bins;
  double oscillatory_fraction = 0;
};

/// Uniform samples of rate space from a seeded generator. Samples are drawn
/// sequentially and classified on up to spec.threads workers; results keep
/// generation order. Throws InputError for an empty grid.
ScanResult scan(const ScanSpec& spec, std::uint64_t seed);

/// CSV header `a,b,c,d,e,f,xi,disc,omega,u,v,monotonic`, one row per sample.
void write_scan_csv(std::ostream& out, const ScanResult& result, int precision);

}  // namespace qtk::relaxation
