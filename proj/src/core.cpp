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

#include "antilin/core.hpp"

#include <algorithm>
#include <cmath>

#include "antilin/linalg.hpp"

namespace antilin {

namespace {

void require_square(const Mat &m) {
    if (m.rows() != m.cols()) throw DimError("operator matrix must be square");
}

void require_same(Index a, Index b) {
    if (a != b) throw DimError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

LinOp::LinOp(Mat m) : mat(std::move(m)) { require_square(mat); }
AntiOp::AntiOp(Mat m) : mat(std::move(m)) { require_square(mat); }

LinOp LinOp::identity(Index d) { return LinOp(Mat::Identity(d, d)); }
AntiOp AntiOp::standard(Index d) { return AntiOp(Mat::Identity(d, d)); }

Vec LinOp::operator()(const Vec &v) const { return apply_lin(*this, v); }
Vec AntiOp::operator()(const Vec &v) const { return apply_anti(*this, v); }

Vec AntiMap::operator()(const Vec &v) const {
    require_same(dim_in(), v.size());
    return mat * v.conjugate();
}

Vec LinMap::operator()(const Vec &v) const {
    require_same(dim_in(), v.size());
    return mat * v;
}

bool is_antilinear(const Op &op) { return std::holds_alternative<AntiOp>(op); }

const Mat &matrix_of(const Op &op) {
    return std::visit([](const auto &x) -> const Mat & { return x.mat; }, op);
}

Index dim_of(const Op &op) { return matrix_of(op).rows(); }

Vec apply_anti(const AntiOp &theta, const Vec &v) {
    require_same(theta.dim(), v.size());
    return theta.mat * v.conjugate();
}

Vec apply_lin(const LinOp &a, const Vec &v) {
    require_same(a.dim(), v.size());
    return a.mat * v;
}

Vec apply(const Op &x, const Vec &v) {
    return std::visit([&](const auto &op) { return op(v); }, x);
}

LinOp compose(const LinOp &x, const LinOp &y) {
    require_same(x.dim(), y.dim());
    return LinOp(x.mat * y.mat);
}

AntiOp compose(const LinOp &x, const AntiOp &y) {
    require_same(x.dim(), y.dim());
    return AntiOp(x.mat * y.mat);
}

AntiOp compose(const AntiOp &x, const LinOp &y) {
    require_same(x.dim(), y.dim());
    return AntiOp(x.mat * y.mat.conjugate());
}

LinOp compose(const AntiOp &x, const AntiOp &y) {
    require_same(x.dim(), y.dim());
    return LinOp(x.mat * y.mat.conjugate());
}

Op compose(const Op &x, const Op &y) {
    return std::visit([](const auto &a, const auto &b) -> Op { return compose(a, b); }, x, y);
}

LinMap compose(const LinMap &x, const LinMap &y) {
    require_same(x.dim_in(), y.dim_out());
    return LinMap(x.mat * y.mat);
}

AntiMap compose(const LinMap &x, const AntiMap &y) {
    require_same(x.dim_in(), y.dim_out());
    return AntiMap(x.mat * y.mat);
}

AntiMap compose(const AntiMap &x, const LinMap &y) {
    require_same(x.dim_in(), y.dim_out());
    return AntiMap(x.mat * y.mat.conjugate());
}

LinMap compose(const AntiMap &x, const AntiMap &y) {
    require_same(x.dim_in(), y.dim_out());
    return LinMap(x.mat * y.mat.conjugate());
}

LinOp operator*(const LinOp &x, const LinOp &y) { return compose(x, y); }
AntiOp operator*(const LinOp &x, const AntiOp &y) { return compose(x, y); }
AntiOp operator*(const AntiOp &x, const LinOp &y) { return compose(x, y); }
LinOp operator*(const AntiOp &x, const AntiOp &y) { return compose(x, y); }

AntiOp operator*(cplx c, const AntiOp &x) { return AntiOp(c * x.mat); }
LinOp operator*(cplx c, const LinOp &x) { return LinOp(c * x.mat); }

AntiOp operator+(const AntiOp &x, const AntiOp &y) {
    require_same(x.dim(), y.dim());
    return AntiOp(x.mat + y.mat);
}
AntiOp operator-(const AntiOp &x, const AntiOp &y) {
    require_same(x.dim(), y.dim());
    return AntiOp(x.mat - y.mat);
}
LinOp operator+(const LinOp &x, const LinOp &y) {
    require_same(x.dim(), y.dim());
    return LinOp(x.mat + y.mat);
}
LinOp operator-(const LinOp &x, const LinOp &y) {
    require_same(x.dim(), y.dim());
    return LinOp(x.mat - y.mat);
}

LinOp adjoint(const LinOp &x) { return LinOp(x.mat.adjoint()); }
AntiOp adjoint(const AntiOp &x) { return AntiOp(x.mat.transpose()); }
Op adjoint(const Op &x) {
    return std::visit([](const auto &a) -> Op { return adjoint(a); }, x);
}
LinMap adjoint(const LinMap &x) { return LinMap(x.mat.adjoint()); }
AntiMap adjoint(const AntiMap &x) { return AntiMap(x.mat.transpose()); }

cplx canonical_form(const AntiOp &theta1, const AntiOp &theta2) {
    return compose(theta2, theta1).mat.trace();
}

std::pair<AntiOp, AntiOp> hermitian_split(const AntiOp &theta) {
    Mat t = theta.mat.transpose();
    return {AntiOp((theta.mat + t) / 2.0), AntiOp((theta.mat - t) / 2.0)};
}

AntiOp rank_one_anti(const Vec &phi_out, const Vec &phi_in) {
    if (phi_out.norm() == 0.0 || phi_in.norm() == 0.0) {
        throw ZeroVectorError("rank-one operator needs nonzero vectors");
    }
    require_same(phi_out.size(), phi_in.size());
    return AntiOp(phi_out * phi_in.transpose());
}

LinOp rank_one_lin(const Vec &phi_out, const Vec &phi_in) {
    if (phi_out.norm() == 0.0 || phi_in.norm() == 0.0) {
        throw ZeroVectorError("rank-one operator needs nonzero vectors");
    }
    require_same(phi_out.size(), phi_in.size());
    return LinOp(phi_out * phi_in.adjoint());
}

// ‖θφ‖ = ‖M conj(φ)‖ and conjugation is isometric.
double operator_norm(const LinOp &x) { return la::op_norm(x.mat); }
double operator_norm(const AntiOp &x) { return la::op_norm(x.mat); }
double operator_norm(const Op &x) { return la::op_norm(matrix_of(x)); }

double field_of_values_radius(const AntiOp &theta) {
    if (theta.dim() < 2) {
        throw UnsupportedDimError("field of values is a disk only for dim >= 2");
    }
    return operator_norm(hermitian_split(theta).first);
}

namespace detail {

Mat involution_fixed_vectors(const AntiOp &j, const Mat &span) {
    const Index d = span.rows();
    const Index g = span.cols();
    const cplx I(0, 1);
    std::vector<Vec> cand;
    for (Index k = 0; k < g; k++) {
        Vec q = span.col(k);
        cand.push_back(q + j(q));
        Vec iq = I * q;
        cand.push_back(iq + j(iq));
    }
    Mat out(d, g);
    Index picked = 0;
    double first = 0;
    while (picked < g) {
        Index best = -1;
        double best_norm = 0;
        for (size_t c = 0; c < cand.size(); c++) {
            double n = cand[c].norm();
            if (n > best_norm) {
                best_norm = n;
                best = (Index)c;
            }
        }
        if (picked == 0) first = best_norm;
        if (best < 0 || best_norm <= 1e-8 * std::max(first, 1e-300)) break;
        Vec s = cand[best] / best_norm;
        out.col(picked++) = s;
        for (auto &c : cand) c -= inner(s, c).real() * s;
    }
    return out.leftCols(picked);
}

}  // namespace detail

EigenStructure eigen_structure(const AntiOp &theta, double tol) {
    const Index d = theta.dim();
    EigenStructure res{{}, false};
    const double nrm = operator_norm(theta);
    if (nrm == 0.0) {
        res.circles.push_back({0.0, (int)d, Mat::Identity(d, d)});
        res.diagonalizable = true;
        return res;
    }
    // θφ = aφ forces θ²φ = |a|²φ, so candidates live in the eigenspaces of
    // the linear operator θ² with real nonnegative eigenvalue. Defective
    // eigenvalues split like sqrt(eps) under rounding, hence the loose
    // clustering radius.
    const double s = nrm * nrm;
    const double ctol = std::sqrt(tol) * s;
    Mat b = compose(theta, theta).mat;
    Eigen::ComplexEigenSolver<Mat> es(b, false);
    Vec ev = es.eigenvalues();
    int total = 0;
    for (const auto &grp : la::cluster(ev, ctol)) {
        cplx mu = 0;
        for (Index k : grp) mu += ev(k);
        mu /= (double)grp.size();
        if (std::abs(mu.imag()) > ctol || mu.real() < -ctol) continue;
        if (std::abs(mu) <= ctol) {
            Mat ker = la::null_space(theta.mat, std::sqrt(tol) * nrm);
            if (ker.cols() > 0) {
                res.circles.push_back({0.0, (int)ker.cols(), ker});
                total += (int)ker.cols();
            }
            continue;
        }
        Mat shifted = b - mu.real() * Mat::Identity(d, d);
        Mat q = la::null_space(shifted, ctol);
        if (q.cols() == 0) continue;
        double r = std::sqrt(mu.real());
        AntiOp j((1.0 / r) * theta.mat);
        Mat fixed = detail::involution_fixed_vectors(j, q);
        // normalize each eigenvector
        for (Index c = 0; c < fixed.cols(); c++) fixed.col(c).normalize();
        res.circles.push_back({r, (int)fixed.cols(), fixed});
        total += (int)fixed.cols();
    }
    std::sort(res.circles.begin(), res.circles.end(),
              [](const EigenCircle &x, const EigenCircle &y) { return x.radius > y.radius; });
    res.diagonalizable = total == d;
    return res;
}

PauliBasis pauli_basis() {
    const cplx I(0, 1);
    PauliBasis p;
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    p.sigma[0] = LinOp(m);
    m << 0, -I, I, 0;
    p.sigma[1] = LinOp(m);
    m << 1, 0, 0, -1;
    p.sigma[2] = LinOp(m);
    m << 0, -1, 1, 0;
    p.tau[0] = AntiOp(m);
    m << -1, 0, 0, 1;
    p.tau[1] = AntiOp(m);
    m << I, 0, 0, I;
    p.tau[2] = AntiOp(m);
    m << 0, 1, 1, 0;
    p.tau[3] = AntiOp(m);
    p.g = Eigen::Vector4d(-1, 1, 1, 1).asDiagonal();

    const Mat one = Mat::Identity(2, 2);
    for (int j = 0; j < 4; j++) {
        for (int k = 0; k < 4; k++) {
            Mat ac = (p.tau[j] * p.tau[k]).mat + (p.tau[k] * p.tau[j]).mat;
            cplx cf = canonical_form(p.tau[j], p.tau[k]);
            if (la::max_abs(ac - 2 * p.g(j, k) * one) > 1e-14 ||
                std::abs(cf - 2 * p.g(j, k)) > 1e-14) {
                throw DecompositionError("Pauli relations violated");
            }
        }
    }
    return p;
}

std::pair<double, double> normality_defects(const AntiOp &theta) {
    AntiOp ad = adjoint(theta);
    double a = la::max_abs((ad * theta).mat - (theta * ad).mat);
    auto [hp, hm] = hermitian_split(theta);
    double b = 2 * la::max_abs((hp * hm).mat - (hm * hp).mat);
    return {a, b};
}

bool is_normal(const AntiOp &theta, double tol) {
    double n = operator_norm(theta);
    return normality_defects(theta).first <= tol * std::max(n * n, 1e-300);
}

}  // namespace antilin
