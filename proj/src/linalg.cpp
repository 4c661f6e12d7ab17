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

#include "antilin/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace antilin::la {

double max_abs(const Mat &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Mat hermitian_part(const Mat &m) {
    return (m + m.adjoint()) / 2.0;
}

bool is_hermitian(const Mat &m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol * std::max(1.0, max_abs(m));
}

bool is_unitary(const Mat &m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m.adjoint() * m - Mat::Identity(m.rows(), m.cols())) <= tol;
}

Mat herm_apply(const Mat &h, const std::function<double(double)> &f) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h));
    Eigen::VectorXd v = es.eigenvalues().unaryExpr(f);
    return es.eigenvectors() * v.asDiagonal() * es.eigenvectors().adjoint();
}

Mat expi_herm(const Mat &h, double t) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h));
    Vec ph(es.eigenvalues().size());
    for (Index k = 0; k < ph.size(); k++) {
        ph(k) = std::polar(1.0, t * es.eigenvalues()(k));
    }
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

double min_eigenvalue(const Mat &h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Mat sqrt_psd(const Mat &p, double tol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(p));
    const Eigen::VectorXd &ev = es.eigenvalues();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    if (ev.minCoeff() < -tol * scale) {
        throw NotPositiveError("matrix has a negative eigenvalue");
    }
    Eigen::VectorXd s = ev.unaryExpr([](double x) { return std::sqrt(std::max(x, 0.0)); });
    return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

Mat pow_pd(const Mat &p, double t, double tol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(p));
    const Eigen::VectorXd &ev = es.eigenvalues();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    if (ev.minCoeff() <= tol * scale) {
        throw NotPositiveError("matrix is not positive definite");
    }
    Eigen::VectorXd s = ev.unaryExpr([t](double x) { return std::pow(x, t); });
    return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::VectorXd singular_values(const Mat &m) {
    if (m.size() == 0) return Eigen::VectorXd();
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues();
}

double op_norm(const Mat &m) {
    Eigen::VectorXd s = singular_values(m);
    return s.size() == 0 ? 0.0 : s(0);
}

double trace_norm(const Mat &m) {
    return singular_values(m).sum();
}

Index numerical_rank(const Mat &m, double abs_tol) {
    Eigen::VectorXd s = singular_values(m);
    Index r = 0;
    for (Index k = 0; k < s.size(); k++) {
        if (s(k) > abs_tol) r++;
    }
    return r;
}

Mat null_space(const Mat &m, double abs_tol) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const Eigen::VectorXd &s = svd.singularValues();
    Index r = 0;
    for (Index k = 0; k < s.size(); k++) {
        if (s(k) > abs_tol) r++;
    }
    return svd.matrixV().rightCols(m.cols() - r);
}

Mat kron(const Mat &a, const Mat &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

std::vector<std::vector<Index>> cluster(const Eigen::VectorXcd &vals, double tol) {
    Index n = vals.size();
    std::vector<Index> label(n, -1);
    std::vector<std::vector<Index>> groups;
    for (Index i = 0; i < n; i++) {
        if (label[i] >= 0) continue;
        label[i] = (Index)groups.size();
        groups.push_back({i});
        // grow the group until no outside value is within tol of a member
        for (size_t q = 0; q < groups.back().size(); q++) {
            Index a = groups.back()[q];
            for (Index j = 0; j < n; j++) {
                if (label[j] < 0 && std::abs(vals(j) - vals(a)) <= tol) {
                    label[j] = label[i];
                    groups.back().push_back(j);
                }
            }
        }
        std::sort(groups.back().begin(), groups.back().end());
    }
    return groups;
}

}  // namespace antilin::la
