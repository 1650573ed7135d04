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

#include "qtk/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <thread>

#include "qtk/error.hpp"

namespace qtk::relaxation {

Secular secular(const ThreeStateRates& r) {
  Secular s;
  s.xi = r.a + r.b + r.c + r.d + r.e + r.f;
  const double eta = r.c + r.d + r.f;
  s.constant = eta * (r.a + r.b + r.e) - (r.e - r.c) * (r.f - r.a);
  s.disc = s.xi * s.xi - 4.0 * s.constant;
  const std::complex<double> root = std::sqrt(std::complex<double>(s.disc, 0.0));
  s.roots[0] = (-s.xi + root) / 2.0;
  s.roots[1] = (-s.xi - root) / 2.0;
  return s;
}

RelaxationReport classify(const ThreeStateRates& r) {
  const Secular s = secular(r);
  RelaxationReport rep;
  rep.xi = s.xi;
  rep.eta = r.c + r.d + r.f;
  rep.disc = s.disc;
  rep.k = r.e - r.c;
  rep.l = r.f - r.a;
  rep.m = r.b - r.d;
  rep.omega = (r.a + r.d + r.e) - (r.b + r.c + r.f);
  rep.u = rep.l + rep.m;
  rep.v = rep.l - rep.m;
  const double sqrt3 = std::sqrt(3.0);
  const double centre = sqrt3 * rep.u + 2.0 * rep.omega / sqrt3;
  rep.ellipse = centre * centre + rep.v * rep.v - rep.omega * rep.omega / 3.0;
  rep.eigenvalues[0] = s.roots[0];
  rep.eigenvalues[1] = s.roots[1];
  rep.monotonic = s.disc >= 0.0;
  rep.boundary = std::abs(s.disc) < 1e-9 * std::max(1.0, s.xi * s.xi);
  return rep;
}

double disc_identity_error(const RelaxationReport& rep) {
  const double l = rep.l, m = rep.m, w = rep.omega;
  const double alt = w * w + 4.0 * w * (l + m) + 4.0 * (l * l + m * m + l * m);
  return std::abs(rep.disc - alt) / std::max(1.0, std::abs(rep.disc));
}

ScanResult scan(const ScanSpec& spec, std::uint64_t seed) {
  if (spec.samples == 0) throw InputError("scan: sample count is zero");
  if (!(spec.hi > spec.lo) || spec.lo < 0.0 || !std::isfinite(spec.hi)) {
    throw InputError("scan: rate range must satisfy 0 <= lo < hi < inf");
  }
  if (spec.bins == 0) throw InputError("scan: bin count is zero");

  ScanResult result;
  result.samples.resize(spec.samples);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(spec.lo, spec.hi);
  for (auto& s : result.samples) {
    ThreeStateRates& r = s.rates;
    r = {dist(rng), dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)};
    if (spec.omega_zero) {
      const double backward = r.b + r.c + r.f;
      const double scale = backward > 0.0 ? (r.a + r.d + r.e) / backward : 0.0;
      r.b *= scale;
      r.c *= scale;
      r.f *= scale;
    }
  }

  const unsigned workers =
      std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(spec.samples)));
  auto classify_range = [&result](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      result.samples[i].report = classify(result.samples[i].rates);
    }
  };
  if (workers == 1) {
    classify_range(0, spec.samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (spec.samples + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(spec.samples, begin + chunk);
      if (begin < end) pool.emplace_back(classify_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  const double omega_max = 3.0 * (spec.hi - spec.lo);
  result.bins.resize(spec.bins);
  for (std::size_t b = 0; b < spec.bins; ++b) {
    result.bins[b].lo = omega_max * static_cast<double>(b) / static_cast<double>(spec.bins);
    result.bins[b].hi = omega_max * static_cast<double>(b + 1) / static_cast<double>(spec.bins);
  }
  std::size_t oscillatory = 0;
  for (const auto& s : result.samples) {
    const double w = std::abs(s.report.omega);
    auto b = static_cast<std::size_t>(w / omega_max * static_cast<double>(spec.bins));
    b = std::min(b, spec.bins - 1);
    ++result.bins[b].count;
    if (!s.report.monotonic) {
      ++result.bins[b].oscillatory;
      ++oscillatory;
    }
  }
  result.oscillatory_fraction =
      static_cast<double>(oscillatory) / static_cast<double>(spec.samples);
  return result;
}

void write_scan_csv(std::ostream& out, const ScanResult& result, int precision) {
  const auto old = out.precision(precision);
  out << "a,b,c,d,e,f,xi,disc,omega,u,v,monotonic\n";
  for (const auto& s : result.samples) {
    const auto& r = s.rates;
    const auto& rep = s.report;
    out << r.a << ',' << r.b << ',' << r.c << ',' << r.d << ',' << r.e << ','
        << r.f << ',' << rep.xi << ',' << rep.disc << ',' << rep.omega << ','
        << rep.u << ',' << rep.v << ',' << (rep.monotonic ? 1 : 0) << '\n';
  }
  out.precision(old);
}

}  // namespace qtk::relaxation
