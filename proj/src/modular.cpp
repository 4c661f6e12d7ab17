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

#include "antilin/modular.hpp"

#include <cmath>

#include "antilin/linalg.hpp"

namespace antilin {

PositiveOp::PositiveOp(Mat m, double tol) : mat(std::move(m)) {
    if (mat.rows() != mat.cols() || mat.rows() == 0) throw DimError("positive operator must be square");
    if (!la::is_hermitian(mat, tol)) throw NotPositiveError("matrix is not Hermitian");
    mat = la::hermitian_part(mat);
    if (la::min_eigenvalue(mat) <= 0) throw NotPositiveError("matrix is not positive definite");
}

PositiveOp geometric_mean(const PositiveOp &a, const PositiveOp &b) {
    if (a.dim() != b.dim()) throw DimError("geometric mean needs equal dimensions");
    Mat ah = la::pow_pd(a.mat, 0.5);
    Mat aih = la::pow_pd(a.mat, -0.5);
    Mat y = la::hermitian_part(aih * b.mat * aih);
    Mat c = ah * la::pow_pd(y, 0.5) * ah;
    return PositiveOp(la::hermitian_part(c));
}

MetricInvolution::MetricInvolution(const PositiveOp &a) : a_(a.mat), a_inv_(la::pow_pd(a.mat, -1.0)) {}

LinOp MetricInvolution::operator()(const LinOp &x) const {
    if (x.dim() != a_.rows()) throw DimError("operator dimension differs from the metric");
    return LinOp(a_inv_ * x.mat.adjoint() * a_);
}

MetricInvolution metric_involution(const PositiveOp &a) { return MetricInvolution(a); }

PositiveOp metric_point(const PositiveOp &a, const PositiveOp &b, double t) {
    if (a.dim() != b.dim()) throw DimError("metric line needs equal dimensions");
    Mat ah = la::pow_pd(a.mat, 0.5);
    Mat aih = la::pow_pd(a.mat, -0.5);
    Mat y = la::hermitian_part(aih * b.mat * aih);
    return PositiveOp(la::hermitian_part(ah * la::pow_pd(y, t) * ah));
}

MetricInvolution metric_acq_line(const PositiveOp &a, const PositiveOp &b, double t) {
    return MetricInvolution(metric_point(a, b, t));
}

ModularTriple modular_from_bipartite(const Mat &c, double tol) {
    if (c.rows() != c.cols() || c.rows() == 0) throw DimError("modular objects need dimA = dimB");
    const Index d = c.rows();
    Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::VectorXd sv = svd.singularValues();
    if (sv(0) == 0.0 || sv(d - 1) <= tol * sv(0)) {
        throw NotSeparatingError("coefficient matrix is singular");
    }
    Eigen::VectorXd p = sv.array().square() / sv.squaredNorm();
    // ψ ∝ Σ σ_l u_l ⊗ conj(v_l)
    Mat w = la::kron(svd.matrixU(), svd.matrixV().conjugate());
    Mat swap = Mat::Zero(d * d, d * d);
    Eigen::VectorXcd ratio(d * d), root(d * d);
    for (Index j = 0; j < d; j++) {
        for (Index k = 0; k < d; k++) {
            swap(k * d + j, j * d + k) = 1;
            ratio(j * d + k) = p(j) / p(k);
            root(j * d + k) = std::sqrt(p(j) / p(k));
        }
    }
    Mat s = w * swap * root.asDiagonal() * w.transpose();
    Mat jm = w * swap * w.transpose();
    Mat delta = la::hermitian_part(w * ratio.asDiagonal() * w.adjoint());
    return {AntiOp(s), PositiveOp(delta), AntiOp(jm)};
}

namespace {

void require_unimodular(const std::vector<cplx> &eps, double tol) {
    if (eps.empty()) throw DimError("no phases");
    for (auto e : eps) {
        if (std::abs(std::abs(e) - 1.0) > tol) throw NotUnimodularError("phase is not unimodular");
    }
}

}  // namespace

ModularTriple modular_commutative(const std::vector<cplx> &eps, double tol) {
    require_unimodular(eps, tol);
    const Index d = (Index)eps.size();
    Vec e(d);
    for (Index k = 0; k < d; k++) e(k) = eps[k] / std::abs(eps[k]);
    Mat m = e.asDiagonal();
    return {AntiOp(m), PositiveOp(Mat::Identity(d, d)), AntiOp(m)};
}

std::vector<cplx> commutative_midpoint(const std::vector<cplx> &eps1, const std::vector<cplx> &eps2,
                                       double tol) {
    require_unimodular(eps1, tol);
    require_unimodular(eps2, tol);
    if (eps1.size() != eps2.size()) throw DimError("phase lists differ in length");
    std::vector<cplx> out;
    for (size_t k = 0; k < eps1.size(); k++) {
        double s = 0.5 * (std::arg(eps1[k]) + std::arg(eps2[k]));
        out.push_back(std::polar(1.0, s));
    }
    return out;
}

ModularTriple modular_geomean(const ModularTriple &t1, const ModularTriple &t2, double tol) {
    if (t1.j.dim() != t2.j.dim()) throw DimError("modular triples differ in dimension");
    if (la::max_abs(t1.j.mat - t2.j.mat) > tol * std::max(1.0, la::max_abs(t1.j.mat))) {
        throw IncompatibleError("modular conjugations differ");
    }
    PositiveOp r1(la::pow_pd(t1.delta.mat, 0.5), tol);
    PositiveOp r2(la::pow_pd(t2.delta.mat, 0.5), tol);
    Mat x = geometric_mean(r1, r2).mat;
    AntiOp s = t1.j * LinOp(x);
    return {s, PositiveOp(la::hermitian_part(x * x)), t1.j};
}

}  // namespace antilin
