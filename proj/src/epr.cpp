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

#include "antilin/epr.hpp"

#include <cmath>
#include <limits>

#include "antilin/linalg.hpp"

namespace antilin {

Vec BipartiteVector::vec() const {
    Mat t = coeffs.transpose();
    return t.reshaped();
}

BipartiteVector BipartiteVector::from_vec(const Vec &v, Index dim_a, Index dim_b) {
    if (v.size() != dim_a * dim_b) throw DimError("vector length differs from dimA*dimB");
    Mat t = v.reshaped(dim_b, dim_a);
    return BipartiteVector(t.transpose());
}

BipartiteVector BipartiteVector::product(const Vec &a, const Vec &b) {
    return BipartiteVector(a * b.transpose());
}

BipartiteVector BipartiteVector::max_entangled(Index d) {
    return BipartiteVector(Mat::Identity(d, d) / std::sqrt((double)d));
}

AntiMap smap_ba(const BipartiteVector &psi) { return AntiMap(psi.coeffs.transpose()); }

AntiMap smap_ab(const BipartiteVector &psi) { return AntiMap(psi.coeffs); }

std::pair<LinMap, LinMap> reduced_densities(const BipartiteVector &psi) {
    LinMap ra = compose(smap_ab(psi), smap_ba(psi));
    LinMap rb = compose(smap_ba(psi), smap_ab(psi));
    return {ra, rb};
}

std::pair<AntiMap, AntiMap> jmaps(const BipartiteVector &psi, double tol) {
    const Mat &c = psi.coeffs;
    Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &sv = svd.singularValues();
    Index r = 0;
    while (r < sv.size() && sv(r) > tol * sv(0)) r++;
    Mat u = svd.matrixU().leftCols(r);
    Mat v = svd.matrixV().leftCols(r);
    // c = UΣV†, s^{ba} = cᵀ = conj(V)Σ Uᵀ = [conj(V) Uᵀ]·conj(U Σ U†)
    AntiMap jba(v.conjugate() * u.transpose());
    AntiMap jab(u * v.adjoint());
    return {jba, jab};
}

AntiOp twisted_product(const AntiMap &t_ab, const AntiMap &t_ba) {
    const Index da = t_ab.dim_out();
    const Index db = t_ab.dim_in();
    if (t_ba.dim_in() != da || t_ba.dim_out() != db) {
        throw DimError("twisted product needs maps B->A and A->B");
    }
    Mat m(da * db, da * db);
    for (Index j = 0; j < da; j++) {
        for (Index k = 0; k < db; k++) {
            m.col(j * db + k) = la::kron(t_ab.mat.col(k), t_ba.mat.col(j));
        }
    }
    return AntiOp(m);
}

LinMap PhiMaps::ba(const LinMap &x_a) const {
    if (s_ba.empty()) throw DimError("empty decomposition");
    LinMap xa = adjoint(x_a);
    Mat out = Mat::Zero(s_ba.front().dim_out(), s_ba.front().dim_out());
    for (size_t j = 0; j < s_ba.size(); j++) out += compose(compose(s_ba[j], xa), s_ab[j]).mat;
    return LinMap(out);
}

LinMap PhiMaps::ab(const LinMap &x_b) const {
    if (s_ab.empty()) throw DimError("empty decomposition");
    LinMap xb = adjoint(x_b);
    Mat out = Mat::Zero(s_ab.front().dim_out(), s_ab.front().dim_out());
    for (size_t j = 0; j < s_ab.size(); j++) out += compose(compose(s_ab[j], xb), s_ba[j]).mat;
    return LinMap(out);
}

PhiMaps phi_maps(const LinMap &rho, const std::vector<BipartiteVector> &decomposition, double tol) {
    if (decomposition.empty()) throw DecompositionError("empty decomposition");
    const Index da = decomposition.front().dim_a();
    const Index db = decomposition.front().dim_b();
    if (rho.dim_in() != da * db || rho.dim_out() != da * db) {
        throw DimError("density matrix does not match the decomposition");
    }
    Mat sum = Mat::Zero(da * db, da * db);
    PhiMaps out;
    for (const auto &psi : decomposition) {
        if (psi.dim_a() != da || psi.dim_b() != db) throw DimError("decomposition dims differ");
        Vec v = psi.vec();
        sum += v * v.adjoint();
        out.s_ba.push_back(smap_ba(psi));
        out.s_ab.push_back(smap_ab(psi));
    }
    if (la::max_abs(sum - rho.mat) > tol * std::max(1.0, la::max_abs(rho.mat))) {
        throw DecompositionError("vectors do not decompose rho");
    }
    return out;
}

TeleportMap teleport_map(const BipartiteVector &phi_bc, const BipartiteVector &psi_ab) {
    if (phi_bc.dim_a() != psi_ab.dim_b()) throw DimError("inner B dimensions differ");
    return compose(smap_ba(phi_bc), smap_ba(psi_ab));
}

namespace {

// Square root of a density matrix; eigenvalues at round-off level go to zero
// so that rank-deficient states do not pick up sqrt(eps) noise.
Mat density_sqrt(const Mat &rho, double tol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(la::hermitian_part(rho));
    const Eigen::VectorXd &ev = es.eigenvalues();
    const double top = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    if (ev.minCoeff() < -tol * std::max(1.0, top)) throw NotPositiveError("state has a negative eigenvalue");
    const double floor = 64 * std::numeric_limits<double>::epsilon() * top;
    Eigen::VectorXd s = ev.unaryExpr([floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
    return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double uhlmann_fidelity(const Mat &rho1, const Mat &rho2, double tol) {
    if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols()) throw DimError("state dims differ");
    // Tr (√ρ1 ρ2 √ρ1)^{1/2} = ‖√ρ1 √ρ2‖₁
    return la::trace_norm(density_sqrt(rho1, tol) * density_sqrt(rho2, tol));
}

double teleport_fidelity(const BipartiteVector &phi_bc, const BipartiteVector &psi_ab, double tol) {
    if (std::abs(phi_bc.coeffs.norm() - 1.0) > tol || std::abs(psi_ab.coeffs.norm() - 1.0) > tol) {
        throw NotNormalizedError("fidelity needs unit vectors");
    }
    return la::trace_norm(teleport_map(phi_bc, psi_ab).mat);
}

ChainMap chain_map(const std::vector<BipartiteVector> &links) {
    if (links.empty()) throw DimError("empty chain");
    ChainMap acc = smap_ba(links.front());
    for (size_t i = 1; i < links.size(); i++) {
        if (links[i].dim_a() != links[i - 1].dim_b()) throw DimError("adjacent link dims differ");
        AntiMap s = smap_ba(links[i]);
        acc = std::visit([&](const auto &m) -> ChainMap { return compose(s, m); }, acc);
    }
    return acc;
}

BipartiteVector entanglement_swap(const BipartiteVector &phi23, const BipartiteVector &phi45,
                                  const BipartiteVector &psi34) {
    if (phi23.dim_b() != psi34.dim_a() || psi34.dim_b() != phi45.dim_a()) {
        throw DimError("swap dims do not chain");
    }
    // s^{2,3} = coeffs(φ23), s^{5,4} = coeffs(φ45)ᵀ, both acting on conj(ψ)
    return BipartiteVector(phi23.coeffs * psi34.coeffs.conjugate() * phi45.coeffs);
}

std::pair<Vec, double> measure_project(const BipartiteVector &psi, const Vec &state,
                                       const std::vector<Index> &dims, size_t position) {
    if (position + 1 >= dims.size()) throw DimError("position outside the factor list");
    if (dims[position] != psi.dim_a() || dims[position + 1] != psi.dim_b()) {
        throw DimError("projector dims differ from the factors");
    }
    Index total = 1, left = 1, right = 1;
    for (size_t k = 0; k < dims.size(); k++) {
        total *= dims[k];
        if (k < position) left *= dims[k];
        if (k > position + 1) right *= dims[k];
    }
    if (state.size() != total) throw DimError("state length differs from the product of dims");
    double n2 = state.squaredNorm();
    double pn = psi.coeffs.norm();
    if (n2 == 0.0 || pn == 0.0) throw ZeroVectorError("cannot project a zero vector");
    Vec p = psi.vec() / pn;
    const Index mid = p.size();
    Vec out(total);
    Vec block(mid);
    for (Index l = 0; l < left; l++) {
        for (Index r = 0; r < right; r++) {
            for (Index i = 0; i < mid; i++) block(i) = state((l * mid + i) * right + r);
            cplx a = p.dot(block);
            for (Index i = 0; i < mid; i++) out((l * mid + i) * right + r) = a * p(i);
        }
    }
    return {out, out.squaredNorm() / n2};
}

}  // namespace antilin
