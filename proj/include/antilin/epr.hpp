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

#ifndef ANTILIN_EPR_HPP
#define ANTILIN_EPR_HPP

#include <utility>
#include <variant>
#include <vector>

#include "antilin/core.hpp"

namespace antilin {

/// ψ = Σ c_jk e_j ⊗ e_k. In the flattened vector, (j, k) sits at j·dimB + k.
struct BipartiteVector {
    Mat coeffs;  // dimA x dimB

    BipartiteVector() = default;
    explicit BipartiteVector(Mat c) : coeffs(std::move(c)) {}

    Index dim_a() const { return coeffs.rows(); }
    Index dim_b() const { return coeffs.cols(); }
    Vec vec() const;
    static BipartiteVector from_vec(const Vec &v, Index dim_a, Index dim_b);
    static BipartiteVector product(const Vec &a, const Vec &b);
    /// (1/√d) Σ e_j ⊗ e_j.
    static BipartiteVector max_entangled(Index d);
};

/// A -> B, (|φ⟩⟨φ| ⊗ 1)ψ = φ ⊗ s^{ba}φ for unit φ.
AntiMap smap_ba(const BipartiteVector &psi);
/// B -> A, the adjoint of smap_ba.
AntiMap smap_ab(const BipartiteVector &psi);

/// (ρ^A, ρ^B) = (s^{ab}s^{ba}, s^{ba}s^{ab}).
std::pair<LinMap, LinMap> reduced_densities(const BipartiteVector &psi);

/// Partial isometries (j^{ba}, j^{ab}) from the polar decomposition
/// s^{ba} = j^{ba}(ρ^A)^{1/2}. Singular values below tol·σ_max count as zero.
std::pair<AntiMap, AntiMap> jmaps(const BipartiteVector &psi, double tol = kDefaultTol);

/// t_ab : B -> A, t_ba : A -> B. Sends φ^A ⊗ φ^B to (t_ab φ^B) ⊗ (t_ba φ^A).
AntiOp twisted_product(const AntiMap &t_ab, const AntiMap &t_ba);

/// Φ^{ba}(X) = Σ s_j^{ba} X† s_j^{ab} and Φ^{ab}(Y) = Σ s_j^{ab} Y† s_j^{ba}.
struct PhiMaps {
    std::vector<AntiMap> s_ba;
    std::vector<AntiMap> s_ab;

    LinMap ba(const LinMap &x_a) const;
    LinMap ab(const LinMap &x_b) const;
};

/// Checks ρ = Σ |ψ_j⟩⟨ψ_j| before building the maps.
PhiMaps phi_maps(const LinMap &rho, const std::vector<BipartiteVector> &decomposition,
                 double tol = kDefaultTol);

/// t^{ca} = s_φ^{cb} s_ψ^{ba}, φ on B ⊗ C and ψ on A ⊗ B.
TeleportMap teleport_map(const BipartiteVector &phi_bc, const BipartiteVector &psi_ab);

/// Uhlmann fidelity Tr (√ρ1 ρ2 √ρ1)^{1/2}.
double uhlmann_fidelity(const Mat &rho1, const Mat &rho2, double tol = kDefaultTol);

/// Trace norm of the teleportation map. Both vectors must be normalized.
double teleport_fidelity(const BipartiteVector &phi_bc, const BipartiteVector &psi_ab,
                         double tol = kDefaultTol);

using ChainMap = std::variant<LinMap, AntiMap>;
/// s^{n+1,n} ... s^{2,1}; link i lives on spaces (i, i+1).
ChainMap chain_map(const std::vector<BipartiteVector> &links);

/// (s^{2,3} ⊗ s^{5,4}) ψ^{3,4}, the state left on 2 ⊗ 5.
BipartiteVector entanglement_swap(const BipartiteVector &phi23, const BipartiteVector &phi45,
                                  const BipartiteVector &psi34);

/// Applies |ψ⟩⟨ψ| (ψ normalized first) to factors (position, position+1) of
/// a product-space state with the given factor dimensions. Returns the
/// unnormalized post-measurement state and its probability.
std::pair<Vec, double> measure_project(const BipartiteVector &psi, const Vec &state,
                                       const std::vector<Index> &dims, size_t position);

}  // namespace antilin

#endif
