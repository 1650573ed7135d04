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

#include "qtk/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qtk/error.hpp"

namespace qtk::multilinear {
namespace {

void require_dim(std::size_t n, std::size_t min, const char* what) {
  if (n < min) {
    throw InputError(std::string(what) + ": dimension " + std::to_string(n) +
                     " is below the minimum " + std::to_string(min));
  }
}

void require_finite(const Eigen::VectorXd& g) {
  if (!g.allFinite()) throw InputError("gradient has non-finite entries");
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

// Visits every permutation of {0..n-1} together with its sign.
template <typename Fn>
void for_each_signed_permutation(std::size_t n, Fn&& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(std::span<const int>(perm), levi_civita_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

int levi_civita_sign(std::span<const int> perm) {
  const auto n = static_cast<int>(perm.size());
  for (int idx : perm) {
    if (idx < 0 || idx >= n) {
      throw InputError("levi_civita_sign: index " + std::to_string(idx) +
                       " outside 0.." + std::to_string(n - 1));
    }
  }
  std::vector<char> seen(perm.size(), 0);
  for (int idx : perm) {
    if (seen[idx]) return 0;
    seen[idx] = 1;
  }
  // parity = (n - number of cycles) mod 2
  std::fill(seen.begin(), seen.end(), 0);
  int transpositions = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int j = start; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? 1 : -1;
}

double normalizer(std::size_t n) {
  require_dim(n, 2, "normalizer");
  return 1.0 / std::sqrt(static_cast<double>(n) * factorial(n - 2));
}

Eigen::VectorXd main_term_bruteforce(const Eigen::VectorXd& g, double norm) {
  const auto n = static_cast<std::size_t>(g.size());
  require_dim(n, 2, "main_term_bruteforce");
  require_finite(g);
  if (n > kMaxBruteForceDim) {
    throw SizeError("main_term_bruteforce: N = " + std::to_string(n) +
                    " exceeds the permutation cap of " +
                    std::to_string(kMaxBruteForceDim) +
                    "; use main_term_closed");
  }
  // A is indexed by its N-2 ordered indices packed in base N.
  auto key = [n](std::span<const int> perm) {
    std::size_t k = 0;
    for (std::size_t t = n; t-- > 2;) k = k * n + static_cast<std::size_t>(perm[t]);
    return k;
  };
  std::size_t table = 1;
  for (std::size_t t = 2; t < n; ++t) table *= n;
  std::vector<double> a(table, 0.0);

  // A_I = n * eps_{k l I} g_k u_l, with u = (1, ..., 1)
  for_each_signed_permutation(n, [&](std::span<const int> perm, int sign) {
    a[key(perm)] += norm * sign * g[perm[0]];
  });

  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  // dp_i = n * eps_{i j I} u_j A_I
  for_each_signed_permutation(n, [&](std::span<const int> perm, int sign) {
    out[perm[0]] += norm * sign * a[key(perm)];
  });
  return out;
}

Eigen::VectorXd main_term_bruteforce(const Eigen::VectorXd& g) {
  return main_term_bruteforce(g, normalizer(static_cast<std::size_t>(g.size())));
}

Eigen::VectorXd main_term_closed(const Eigen::VectorXd& g) {
  require_dim(static_cast<std::size_t>(g.size()), 2, "main_term_closed");
  require_finite(g);
  return g.array() - g.mean();
}

Eigen::MatrixXd hyperplane_basis(std::size_t n) {
  require_dim(n, 2, "hyperplane_basis");
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(dim, dim - 1);
  for (Eigen::Index b = 0; b < dim - 1; ++b) {
    basis(b, b) = 1.0;
    basis(b + 1, b) = -1.0;
  }
  return basis;
}

Eigen::VectorXd ham_term(const Eigen::VectorXd& g, std::span<const int> subset) {
  const auto n = static_cast<std::size_t>(g.size());
  require_dim(n, 3, "ham_term");
  require_finite(g);
  if (subset.size() != n - 3) {
    throw InputError("ham_term: subset must hold N-3 = " +
                     std::to_string(n - 3) + " basis indices, got " +
                     std::to_string(subset.size()));
  }
  std::vector<char> used(n - 1, 0);
  for (int s : subset) {
    if (s < 0 || s >= static_cast<int>(n - 1) || used[s]) {
      throw InputError("ham_term: subset entries must be distinct and in 0.." +
                       std::to_string(n - 2));
    }
    used[s] = 1;
  }

  const auto dim = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXd basis = hyperplane_basis(n);
  Eigen::MatrixXd rows(dim, dim);
  rows.row(1).setOnes();
  rows.row(2) = g.transpose();
  for (std::size_t t = 0; t < subset.size(); ++t) {
    rows.row(static_cast<Eigen::Index>(3 + t)) = basis.col(subset[t]).transpose();
  }
  Eigen::VectorXd out(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    rows.row(0).setZero();
    rows(0, i) = 1.0;
    out[i] = rows.determinant();
  }
  return out;
}

Eigen::MatrixXd ham_matrix(std::size_t n, std::span<const int> subset) {
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    m.col(k) = ham_term(Eigen::VectorXd::Unit(dim, k), subset);
  }
  return m;
}

Eigen::VectorXd six_slot_main_term(const Eigen::Vector3d& g3,
                                   std::span<const double> p6, double norm) {
  if (p6.size() != 6) throw InputError("six_slot_main_term: expected 6 variables");
  if (!g3.allFinite()) throw InputError("six_slot_main_term: non-finite gradient");
  for (std::size_t k = 0; k < 6; k += 2) {
    if (std::abs(p6[k] + p6[k + 1] - 1.0) > 1e-12) {
      throw InputError("six_slot_main_term: pair (p" + std::to_string(k + 1) +
                       ", p" + std::to_string(k + 2) + ") does not sum to 1");
    }
  }
  const double ds[6] = {g3.x(), -g3.x(), g3.y(), -g3.y(), g3.z(), -g3.z()};
  const double h1[6] = {1, 1, 0, 0, 0, 0};
  const double h2[6] = {0, 0, 1, 1, 0, 0};
  const double h3[6] = {0, 0, 0, 0, 1, 1};

  double a[6][6] = {};
  for_each_signed_permutation(6, [&](std::span<const int> p, int sign) {
    a[p[0]][p[1]] += norm * sign * ds[p[2]] * h1[p[3]] * h2[p[4]] * h3[p[5]];
  });
  Eigen::VectorXd out = Eigen::VectorXd::Zero(6);
  for_each_signed_permutation(6, [&](std::span<const int> p, int sign) {
    out[p[0]] += norm * sign * h1[p[1]] * h2[p[2]] * h3[p[3]] * a[p[4]][p[5]];
  });
  return out;
}

}  // namespace qtk::multilinear
