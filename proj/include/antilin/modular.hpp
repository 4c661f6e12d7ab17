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

#ifndef ANTILIN_MODULAR_HPP
#define ANTILIN_MODULAR_HPP

#include <vector>

#include "antilin/core.hpp"

namespace antilin {

/// Hermitian positive definite matrix, validated on construction.
struct PositiveOp {
    Mat mat;

    PositiveOp() = default;
    explicit PositiveOp(Mat m, double tol = kDefaultTol);

    Index dim() const { return mat.rows(); }
    LinOp op() const { return LinOp(mat); }
};

/// A # B = A^{1/2}(A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}.
PositiveOp geometric_mean(const PositiveOp &a, const PositiveOp &b);

/// X -> A⁻¹X†A, the adjoint for ⟨φ, ψ⟩_A = ⟨φ, Aψ⟩.
class MetricInvolution {
   public:
    explicit MetricInvolution(const PositiveOp &a);
    LinOp operator()(const LinOp &x) const;
    const Mat &metric() const { return a_; }

   private:
    Mat a_;
    Mat a_inv_;
};

MetricInvolution metric_involution(const PositiveOp &a);

/// C_t = A^{1/2} Y^t A^{1/2}, Y = A^{-1/2} B A^{-1/2}.
PositiveOp metric_point(const PositiveOp &a, const PositiveOp &b, double t);
MetricInvolution metric_acq_line(const PositiveOp &a, const PositiveOp &b, double t);

struct ModularTriple {
    AntiOp s;
    PositiveOp delta;
    AntiOp j;
};

/// Modular objects of ψ = Σ c_jk e_j ⊗ e_k for the algebra B(H^A) ⊗ 1.
/// Index (j, k) of the product space is j·dimB + k. Scale of ψ is irrelevant.
ModularTriple modular_from_bipartite(const Mat &coeffs, double tol = kDefaultTol);

/// Commutative algebra of diagonal matrices, ψ with phases ε_k: S = J = diag(ε)
/// as an antilinear operator, Δ = 1.
ModularTriple modular_commutative(const std::vector<cplx> &eps, double tol = kDefaultTol);

/// Phases ε with ε² = ε'ε'', so that S' S = S S'' for the commutative triples.
std::vector<cplx> commutative_midpoint(const std::vector<cplx> &eps1, const std::vector<cplx> &eps2,
                                       double tol = kDefaultTol);

/// S with S1 S = S S2 and the common J. Its modular operator has square root
/// Δ1^{1/2} # Δ2^{1/2}, which is Δ1 # Δ2 when the two commute.
ModularTriple modular_geomean(const ModularTriple &t1, const ModularTriple &t2,
                              double tol = kDefaultTol);

}  // namespace antilin

#endif
