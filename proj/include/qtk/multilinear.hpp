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

// Levi-Civita machinery behind every quasithermodynamic equation form.
//
// The "energy" of a probabilistic system is H = sum_i p_i, so its gradient is
// the ones-vector u. The dissipative part of a QT flow is the double
// contraction
//
//   dp_i = n^2 eps_{i j I} u_j eps_{k l I} g_k u_l        (I = N-2 free indices)
//
// with g = dS/dp. Using eps.eps = (N-2)! (delta delta - delta delta) this
// collapses to n^2 (N-2)! (N g_i - sum g), i.e. the simplex projection of g
// once n = normalizer(N). The brute-force routines below evaluate the
// permutation sums literally and exist as correctness oracles.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qtk::multilinear {

/// Largest dimension accepted by the permutation-sum routines (8! terms).
inline constexpr std::size_t kMaxBruteForceDim = 8;

/// Sign of the permutation `perm` of {0..N-1}, N = perm.size(): +1 even,
/// -1 odd, 0 when an index repeats. Throws InputError for indices >= N.
int levi_civita_sign(std::span<const int> perm);

/// Normalizer 1/sqrt(N (N-2)!) that turns the double contraction into the
/// simplex projection. normalizer(4) = 1/sqrt(8).
double normalizer(std::size_t n);

/// Double contraction evaluated by summing over permutations, with `norm`
/// applied to both epsilon factors. Throws SizeError for N > 8.
Eigen::VectorXd main_term_bruteforce(const Eigen::VectorXd& g, double norm);
Eigen::VectorXd main_term_bruteforce(const Eigen::VectorXd& g);

/// Closed form g_i - mean(g); equal to main_term_bruteforce(g) at the
/// default normalizer.
Eigen::VectorXd main_term_closed(const Eigen::VectorXd& g);

/// Difference basis e_b - e_{b+1}, b = 0..N-2, of the hyperplane orthogonal
/// to the ones-vector. Returned as the N x (N-1) matrix of column vectors.
Eigen::MatrixXd hyperplane_basis(std::size_t n);

/// Hamiltonian-like term
///
///   h_i = eps_{i j k m_1..m_{N-3}} u_j g_k v^(s_1)_{m_1} ... v^(s_{N-3})_{m_{N-3}}
///
/// where v^(s) are the hyperplane basis vectors picked by `subset` (0-based
/// indices into hyperplane_basis). Evaluated as det[e_i; u; g; v...]. At
/// N = 3 the subset is empty and h = u x g.
Eigen::VectorXd ham_term(const Eigen::VectorXd& g, std::span<const int> subset);

/// Matrix M with ham_term(g, subset) == M g. Antisymmetric, M u = 0.
Eigen::MatrixXd ham_matrix(std::size_t n, std::span<const int> subset);

/// Six-variable double contraction with the three pair integrals
/// H1 = p1+p2, H2 = p3+p4, H3 = p5+p6 in the energy slots:
///
///   dp_i = n eps_{i k l m a b} dH1_k dH2_l dH3_m A_ab,
///   A_ab = n eps_{a b r s t w} dS_r dH1_s dH2_t dH3_w,
///
/// for an entropy S(p1-p2, p3-p4, p5-p6) with gradient `g3` in the three
/// difference variables. Evaluated as literal permutation sums. The result
/// satisfies dp1 = 8 n^2 (dS/dp1 - dS/dp2), hence d(p1-p2)/dt = 32 n^2 g3_x.
Eigen::VectorXd six_slot_main_term(const Eigen::Vector3d& g3,
                                   std::span<const double> p6, double norm);

}  // namespace qtk::multilinear
