// Copyright 2026 The antilin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANTILIN_EQUIVALENCE_HPP
#define ANTILIN_EQUIVALENCE_HPP

#include <functional>
#include <tuple>
#include <vector>

#include "antilin/core.hpp"

namespace antilin {

/// X -> θX†θ for a conjugation θ.
LinOp theta_transpose(const LinOp &x, const AntiOp &theta, double tol = kDefaultTol);

/// (Tr X, Tr X², Tr X†X), a complete unitary invariant in dim 2.
std::tuple<cplx, cplx, double> uet_invariants_dim2(const LinOp &x);

/// The two degree-6 words Tr(X†XX†X²X†) and Tr(X†X²X†XX†).
std::pair<cplx, cplx> uet_words_dim3(const LinOp &x);
/// Words agree within tol·‖X‖⁶.
bool uet_test_dim3(const LinOp &x, double tol = kDefaultTol);

/// X -> Σ ϑ_i X† ϑ_i†.
struct CopositiveMap {
    std::vector<AntiOp> kraus_anti;
    LinOp k_op;  // Σ ϑ_i†ϑ_i

    int length() const { return (int)kraus_anti.size(); }
};

CopositiveMap make_copositive(std::vector<AntiOp> kraus);
LinOp apply_copositive(const CopositiveMap &t, const LinOp &x);

/// Map sending |φ_j⟩⟨φ_k| to β_jk|φ'_k⟩⟨φ'_j| with minimal length rank β.
CopositiveMap build_copositive(const std::vector<Vec> &inputs, const std::vector<Vec> &outputs,
                               const Mat &beta, double tol = kDefaultTol);

/// ⟨φi,φj⟩⟨φj,φk⟩⟨φk,φi⟩ = ⟨φ'j,φ'i⟩⟨φ'i,φ'k⟩⟨φ'k,φ'j⟩ for all triples.
bool strong_angle_test(const std::vector<Vec> &inputs, const std::vector<Vec> &outputs,
                       double tol = kDefaultTol);

/// β_ij β_jk β_ki = 1 for all triples.
bool rank_one_beta_test(const Mat &beta, double tol = kDefaultTol);

/// arg Tr(P1 P2 ... Pn) in (-π, π].
double geometric_phase(const std::vector<LinOp> &projections, double tol = kDefaultTol);

struct AoSpaceInertia {
    int n_plus;
    int n_minus;
    int n_zero;
};

/// Inertia of the canonical form restricted to span(basis).
AoSpaceInertia ao_space_inertia(const std::vector<AntiOp> &basis, double tol = 1e-10);

using AoInner = std::function<cplx(const AntiOp &, const AntiOp &)>;
/// sign·(.,.) with the canonical form.
AoInner canonical_inner(int sign = 1);

/// Σ θ_j X† θ_j† for a basis orthonormal under `inner`.
CopositiveMap ao_space_map(const std::vector<AntiOp> &orthonormal_basis, const AoInner &inner,
                           double tol = 1e-10);

/// Hermitian and skew-Hermitian bases (ϑ_k^k, (ϑ_j^k ± ϑ_k^j)/√2).
std::vector<AntiOp> hermitian_anti_basis(Index d);
std::vector<AntiOp> skew_anti_basis(Index d);

}  // namespace antilin

#endif
