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

#include "antilin/equivalence.hpp"

#include <cmath>

#include "antilin/decomp.hpp"
#include "antilin/linalg.hpp"

namespace antilin {

LinOp theta_transpose(const LinOp &x, const AntiOp &theta, double tol) {
    if (classify(theta, tol) != AntiClass::Conjugation) {
        throw NotConjugationError("transpose needs a conjugation");
    }
    return theta * adjoint(x) * theta;
}

std::tuple<cplx, cplx, double> uet_invariants_dim2(const LinOp &x) {
    if (x.dim() != 2) throw DimError("invariant triple is defined for dim 2");
    const Mat &m = x.mat;
    return {m.trace(), (m * m).trace(), (m.adjoint() * m).trace().real()};
}

std::pair<cplx, cplx> uet_words_dim3(const LinOp &x) {
    if (x.dim() != 3) throw DimError("degree-6 criterion is defined for dim 3");
    const Mat &m = x.mat;
    Mat a = m.adjoint();
    Mat m2 = m * m;
    cplx w1 = (a * m * a * m2 * a).trace();
    cplx w2 = (a * m2 * a * m * a).trace();
    return {w1, w2};
}

bool uet_test_dim3(const LinOp &x, double tol) {
    auto [w1, w2] = uet_words_dim3(x);
    double n = operator_norm(x);
    return std::abs(w1 - w2) <= tol * std::pow(n, 6);
}

CopositiveMap make_copositive(std::vector<AntiOp> kraus) {
    if (kraus.empty()) throw DimError("copositive map needs at least one term");
    const Index d = kraus.front().dim();
    Mat k = Mat::Zero(d, d);
    for (const auto &t : kraus) {
        if (t.dim() != d) throw DimError("Kraus terms differ in dimension");
        k += (adjoint(t) * t).mat;
    }
    return {std::move(kraus), LinOp(k)};
}

LinOp apply_copositive(const CopositiveMap &t, const LinOp &x) {
    const Index d = t.k_op.dim();
    if (x.dim() != d) throw DimError("operator dimension differs from the map");
    LinOp xa = adjoint(x);
    Mat out = Mat::Zero(d, d);
    for (const auto &v : t.kraus_anti) out += (v * xa * adjoint(v)).mat;
    return LinOp(out);
}

namespace {

Mat stack(const std::vector<Vec> &vs, Index d) {
    Mat m(d, (Index)vs.size());
    for (size_t k = 0; k < vs.size(); k++) {
        if (vs[k].size() != d) throw DimError("vector length mismatch");
        m.col((Index)k) = vs[k];
    }
    return m;
}

void require_unit(const std::vector<Vec> &vs, double tol) {
    for (const auto &v : vs) {
        if (std::abs(v.norm() - 1.0) > std::sqrt(tol)) {
            throw DegenerateInputError("vectors must be normalized");
        }
    }
}

void require_independent(const Mat &phi) {
    Eigen::VectorXd sv = la::singular_values(phi);
    if (sv.size() == 0 || sv(sv.size() - 1) == 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) {
        throw DegenerateInputError("input vectors are linearly dependent");
    }
}

void require_beta(const Mat &beta, Index n, double tol) {
    if (beta.rows() != n || beta.cols() != n) throw BetaError("beta has the wrong shape");
    if (!la::is_hermitian(beta, tol)) throw BetaError("beta is not Hermitian");
    for (Index k = 0; k < n; k++) {
        if (std::abs(beta(k, k) - 1.0) > tol) throw BetaError("beta needs a unit diagonal");
    }
    if (la::min_eigenvalue(beta) < -tol * n) throw BetaError("beta is not positive semi-definite");
}

}  // namespace

CopositiveMap build_copositive(const std::vector<Vec> &inputs, const std::vector<Vec> &outputs,
                               const Mat &beta, double tol) {
    if (inputs.empty() || inputs.size() != outputs.size()) {
        throw DimError("inputs and outputs must have the same nonzero length");
    }
    const Index d = inputs.front().size();
    const Index n = (Index)inputs.size();
    if (n > d) throw DegenerateInputError("more inputs than the dimension");
    Mat phi = stack(inputs, d);
    Mat phi_out = stack(outputs, d);
    require_unit(inputs, tol);
    require_unit(outputs, tol);
    require_independent(phi);
    require_beta(beta, n, tol);

    // bi-orthogonal duals inside span(φ): ⟨φ̃_j, φ_k⟩ = δ_jk
    Mat dual = phi * (phi.adjoint() * phi).inverse();

    // β = Σ λ u u†, α_ij = √λ_i conj(u_i[j]) so that β_jk = Σ_i conj(α_ij) α_ik
    Eigen::SelfAdjointEigenSolver<Mat> es(la::hermitian_part(beta));
    const Eigen::VectorXd &lam = es.eigenvalues();
    double lmax = lam.maxCoeff();
    std::vector<AntiOp> kraus;
    for (Index i = n - 1; i >= 0; i--) {
        if (lam(i) <= tol * std::max(1.0, lmax)) continue;
        Vec alpha = std::sqrt(lam(i)) * es.eigenvectors().col(i).conjugate();
        kraus.emplace_back(phi_out * alpha.asDiagonal() * dual.transpose());
    }
    return make_copositive(std::move(kraus));
}

bool strong_angle_test(const std::vector<Vec> &inputs, const std::vector<Vec> &outputs, double tol) {
    if (inputs.empty() || inputs.size() != outputs.size()) {
        throw DegenerateInputError("inputs and outputs must have the same nonzero length");
    }
    const Index d = inputs.front().size();
    const Index n = (Index)inputs.size();
    if (n > d) throw DegenerateInputError("more inputs than the dimension");
    Mat phi = stack(inputs, d);
    Mat phi_out = stack(outputs, d);
    require_unit(inputs, tol);
    require_unit(outputs, tol);
    require_independent(phi);
    Mat g = phi.adjoint() * phi;          // g(i,j) = ⟨φi, φj⟩
    Mat h = phi_out.adjoint() * phi_out;  // h(i,j) = ⟨φ'i, φ'j⟩
    for (Index i = 0; i < n; i++) {
        for (Index j = 0; j < n; j++) {
            for (Index k = 0; k < n; k++) {
                cplx lhs = g(i, j) * g(j, k) * g(k, i);
                cplx rhs = h(j, i) * h(i, k) * h(k, j);
                if (std::abs(lhs - rhs) > tol) return false;
            }
        }
    }
    return true;
}

bool rank_one_beta_test(const Mat &beta, double tol) {
    const Index n = beta.rows();
    require_beta(beta, n, tol);
    for (Index i = 0; i < n; i++) {
        for (Index j = 0; j < n; j++) {
            for (Index k = 0; k < n; k++) {
                if (std::abs(beta(i, j) * beta(j, k) * beta(k, i) - 1.0) > tol) return false;
            }
        }
    }
    return true;
}

double geometric_phase(const std::vector<LinOp> &projections, double tol) {
    if (projections.empty()) throw DimError("no projections");
    const Index d = projections.front().dim();
    Mat prod = Mat::Identity(d, d);
    for (const auto &p : projections) {
        if (p.dim() != d) throw DimError("projections differ in dimension");
        prod = prod * p.mat;
    }
    cplx z = prod.trace();
    if (std::abs(z) < tol) throw UndefinedPhaseError("Tr P1...Pn vanishes");
    return std::arg(z);
}

AoSpaceInertia ao_space_inertia(const std::vector<AntiOp> &basis, double tol) {
    if (basis.empty()) return {0, 0, 0};
    const Index d = basis.front().dim();
    const Index m = (Index)basis.size();
    Mat vecs(d * d, m);
    double scale = 0;
    for (Index k = 0; k < m; k++) {
        if (basis[k].dim() != d) throw DimError("basis elements differ in dimension");
        vecs.col(k) = basis[k].mat.reshaped();
        scale = std::max(scale, basis[k].mat.squaredNorm());
    }
    Eigen::VectorXd sv = la::singular_values(vecs);
    if (sv(m - 1) <= 1e-10 * sv(0)) throw DegenerateInputError("basis is linearly dependent");
    Mat g(m, m);
    for (Index a = 0; a < m; a++) {
        for (Index b = 0; b < m; b++) g(a, b) = canonical_form(basis[a], basis[b]);
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(la::hermitian_part(g), Eigen::EigenvaluesOnly);
    AoSpaceInertia r{0, 0, 0};
    for (Index k = 0; k < m; k++) {
        double v = es.eigenvalues()(k);
        if (v > tol * scale) {
            r.n_plus++;
        } else if (v < -tol * scale) {
            r.n_minus++;
        } else {
            r.n_zero++;
        }
    }
    return r;
}

AoInner canonical_inner(int sign) {
    return [sign](const AntiOp &a, const AntiOp &b) { return (double)sign * canonical_form(a, b); };
}

CopositiveMap ao_space_map(const std::vector<AntiOp> &orthonormal_basis, const AoInner &inner_fn,
                           double tol) {
    const size_t m = orthonormal_basis.size();
    for (size_t a = 0; a < m; a++) {
        for (size_t b = 0; b < m; b++) {
            cplx g = inner_fn(orthonormal_basis[a], orthonormal_basis[b]);
            if (std::abs(g - (a == b ? 1.0 : 0.0)) > tol) {
                throw BasisError("basis is not orthonormal for the supplied scalar product");
            }
        }
    }
    return make_copositive(orthonormal_basis);
}

std::vector<AntiOp> hermitian_anti_basis(Index d) {
    std::vector<AntiOp> out;
    for (Index k = 0; k < d; k++) {
        Mat m = Mat::Zero(d, d);
        m(k, k) = 1;
        out.emplace_back(m);
    }
    for (Index j = 0; j < d; j++) {
        for (Index k = j + 1; k < d; k++) {
            Mat m = Mat::Zero(d, d);
            m(j, k) = m(k, j) = 1 / std::sqrt(2.0);
            out.emplace_back(m);
        }
    }
    return out;
}

std::vector<AntiOp> skew_anti_basis(Index d) {
    std::vector<AntiOp> out;
    for (Index j = 0; j < d; j++) {
        for (Index k = j + 1; k < d; k++) {
            Mat m = Mat::Zero(d, d);
            m(j, k) = 1 / std::sqrt(2.0);
            m(k, j) = -1 / std::sqrt(2.0);
            out.emplace_back(m);
        }
    }
    return out;
}

}  // namespace antilin
