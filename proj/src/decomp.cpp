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

#include "antilin/decomp.hpp"

#include <algorithm>
#include <cmath>

#include "antilin/linalg.hpp"

namespace antilin {

PolarParts polar_anti(const AntiOp &theta, double tol) {
    Eigen::JacobiSVD<Mat> svd(theta.mat, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat &u = svd.matrixU();
    const Mat &v = svd.matrixV();
    Eigen::VectorXd s = svd.singularValues();
    Index r = 0;
    double smax = s.size() ? s(0) : 0.0;
    for (Index k = 0; k < s.size(); k++) {
        if (s(k) > tol * smax) r++;
    }
    // M = UΣV†, θθ† = UΣ²U†, θ†θ = conj(V)Σ²Vᵀ.
    Mat iso = u.leftCols(r) * v.leftCols(r).adjoint();
    Mat sd = s.cast<cplx>().asDiagonal();
    PolarParts p;
    p.left = AntiOp(iso);
    p.right = AntiOp(iso);
    p.modulus = LinOp(u * sd * u.adjoint());
    p.modulus_right = LinOp(v.conjugate() * sd * v.transpose());
    return p;
}

namespace {

struct Block {
    double key;     // radius or |z|
    double angle;   // arg z, 0 for 1-blocks
    bool two;
    Vec a, b;
};

}  // namespace

WhvForm whv_decompose(const AntiOp &theta, double tol) {
    const Index d = theta.dim();
    WhvForm form;
    const double nrm = operator_norm(theta);
    if (nrm == 0.0) {
        form.blocks_1d.assign(d, 0.0);
        form.basis = Mat::Identity(d, d);
        return form;
    }
    if (!is_normal(theta, tol)) throw NotNormalError("operator is not normal");

    // θ² is a normal linear operator commuting with θ; θ maps its
    // μ-eigenspace onto the conj(μ)-eigenspace.
    const double scale = nrm * nrm;
    const double ctol = tol * scale;
    Mat b = compose(theta, theta).mat;
    Eigen::ComplexSchur<Mat> schur(b);
    const Mat &q = schur.matrixU();
    Vec ev = schur.matrixT().diagonal();
    auto groups = la::cluster(ev, ctol);

    std::vector<Block> blocks;
    std::vector<bool> used(groups.size(), false);
    auto group_mean = [&](size_t g) {
        cplx m = 0;
        for (Index k : groups[g]) m += ev(k);
        return m / (double)groups[g].size();
    };
    auto span_of = [&](size_t g) {
        Mat s(d, (Index)groups[g].size());
        for (size_t c = 0; c < groups[g].size(); c++) s.col((Index)c) = q.col(groups[g][c]);
        return s;
    };
    auto add_pair = [&](const Vec &p1, cplx mu_hint) {
        cplx mu = inner(p1, b * p1);
        if (std::abs(mu) < 0.5 * std::abs(mu_hint)) mu = mu_hint;
        cplx z = std::sqrt(mu);
        if (z.imag() < 0) z = -z;
        Vec p2 = theta(p1) / std::conj(z);
        p2.normalize();
        blocks.push_back({std::abs(z), std::arg(z), true, p1, p2});
    };

    for (size_t g = 0; g < groups.size(); g++) {
        if (used[g]) continue;
        used[g] = true;
        cplx mu = group_mean(g);
        Mat span = span_of(g);
        const Index m = span.cols();
        if (std::abs(mu.imag()) <= ctol) {
            if (std::abs(mu) <= ctol) {
                for (Index c = 0; c < m; c++) blocks.push_back({0.0, 0.0, false, span.col(c), Vec()});
            } else if (mu.real() > 0) {
                AntiOp j((1.0 / std::sqrt(mu.real())) * theta.mat);
                Mat fx = detail::involution_fixed_vectors(j, span);
                if (fx.cols() != m) throw NotNormalError("eigenspace is not a conjugation block");
                for (Index c = 0; c < m; c++) {
                    Vec f = fx.col(c).normalized();
                    blocks.push_back({std::sqrt(mu.real()), 0.0, false, f, Vec()});
                }
            } else {
                // θ restricted here is a multiple of a skew conjugation.
                if (m % 2) throw NotNormalError("odd-dimensional skew block");
                Mat rest = span;
                for (Index step = 0; step < m / 2; step++) {
                    Index best = 0;
                    rest.colwise().norm().maxCoeff(&best);
                    Vec p1 = rest.col(best).normalized();
                    add_pair(p1, mu);
                    const Vec &p2 = blocks.back().b;
                    rest -= p1 * (p1.adjoint() * rest);
                    rest -= p2 * (p2.adjoint() * rest);
                }
            }
            continue;
        }
        // non-real μ: pair with the conj(μ) group and take φ' from the upper
        // half plane so that z lands in the first quadrant
        size_t partner = groups.size();
        double best = 1e300;
        for (size_t h = 0; h < groups.size(); h++) {
            if (used[h]) continue;
            double dist = std::abs(group_mean(h) - std::conj(mu));
            if (dist < best) {
                best = dist;
                partner = h;
            }
        }
        if (partner == groups.size() || groups[partner].size() != groups[g].size() ||
            best > 10 * ctol + 1e-12 * scale) {
            throw NotNormalError("unpaired eigenvalue of the square");
        }
        used[partner] = true;
        size_t upper = mu.imag() > 0 ? g : partner;
        Mat us = span_of(upper);
        cplx mu_up = group_mean(upper);
        for (Index c = 0; c < us.cols(); c++) add_pair(us.col(c).normalized(), mu_up);
    }

    std::stable_sort(blocks.begin(), blocks.end(), [](const Block &x, const Block &y) {
        if (x.two != y.two) return !x.two;
        if (x.key != y.key) return x.key > y.key;
        return x.angle < y.angle;
    });
    Mat w(d, d);
    Index col = 0;
    for (const auto &bl : blocks) {
        w.col(col++) = bl.a;
        if (bl.two) w.col(col++) = bl.b;
    }
    if (col != d) throw NotNormalError("block count mismatch");
    // closest unitary, then read the blocks off the transformed matrix
    Eigen::JacobiSVD<Mat> svd(w, Eigen::ComputeFullU | Eigen::ComputeFullV);
    w = svd.matrixU() * svd.matrixV().adjoint();
    Mat n = w.adjoint() * theta.mat * w.conjugate();
    col = 0;
    for (const auto &bl : blocks) {
        if (bl.two) {
            form.blocks_2d.push_back(n(col, col + 1));
            col += 2;
        } else {
            form.blocks_1d.push_back(n(col, col).real());
            col += 1;
        }
    }
    form.basis = w;
    return form;
}

Mat whv_block_matrix(const WhvForm &form) {
    const Index d = form.basis.rows();
    Mat n = Mat::Zero(d, d);
    Index col = 0;
    for (double r : form.blocks_1d) {
        n(col, col) = r;
        col++;
    }
    for (cplx z : form.blocks_2d) {
        n(col, col + 1) = z;
        n(col + 1, col) = std::conj(z);
        col += 2;
    }
    return n;
}

AntiOp whv_reassemble(const WhvForm &form) {
    const Mat &w = form.basis;
    return AntiOp(w * whv_block_matrix(form) * w.transpose());
}

const char *to_string(AntiClass c) {
    switch (c) {
        case AntiClass::Conjugation: return "Conjugation";
        case AntiClass::SkewConjugation: return "SkewConjugation";
        case AntiClass::Antiunitary: return "Antiunitary";
        case AntiClass::Involution: return "Involution";
        case AntiClass::SkewInvolution: return "SkewInvolution";
        case AntiClass::HermitianAnti: return "HermitianAnti";
        case AntiClass::SkewHermitianAnti: return "SkewHermitianAnti";
        case AntiClass::Normal: return "Normal";
        case AntiClass::General: return "General";
    }
    return "General";
}

AntiClass classify(const AntiOp &theta, double tol) {
    const Index d = theta.dim();
    const Mat one = Mat::Identity(d, d);
    const double sc = std::max(1.0, la::max_abs(theta.mat));
    Mat sq = compose(theta, theta).mat;
    Mat t = theta.mat.transpose();
    bool sq_pos = la::max_abs(sq - one) <= tol * sc * sc;
    bool sq_neg = la::max_abs(sq + one) <= tol * sc * sc;
    bool herm = la::max_abs(theta.mat - t) <= tol * sc;
    bool skew = la::max_abs(theta.mat + t) <= tol * sc;
    bool unit = la::max_abs(compose(adjoint(theta), theta).mat - one) <= tol * sc * sc;
    if (sq_pos && herm && unit) return AntiClass::Conjugation;
    if (sq_neg && skew && unit) return AntiClass::SkewConjugation;
    if (unit) return AntiClass::Antiunitary;
    if (sq_pos) return AntiClass::Involution;
    if (sq_neg) return AntiClass::SkewInvolution;
    if (herm) return AntiClass::HermitianAnti;
    if (skew) return AntiClass::SkewHermitianAnti;
    if (is_normal(theta, tol)) return AntiClass::Normal;
    return AntiClass::General;
}

InvolutionParts involution_polar(const AntiOp &s, double tol) {
    const Index d = s.dim();
    const Mat one = Mat::Identity(d, d);
    Mat sq = compose(s, s).mat;
    double sc = std::max(1.0, la::op_norm(s.mat));
    bool pos = la::max_abs(sq - one) <= tol * sc * sc;
    bool neg = la::max_abs(sq + one) <= tol * sc * sc;
    if (!pos && !neg) throw NotInvolutionError("S² is not ±1");
    Mat mod = la::sqrt_psd(s.mat * s.mat.adjoint());
    Mat conj_part = mod.inverse() * s.mat;
    return {LinOp(mod), AntiOp(conj_part), neg};
}

bool is_diagonalizable(const AntiOp &theta, double tol) {
    return eigen_structure(theta, tol).diagonalizable;
}

std::vector<Vec> fixed_real_subspace(const AntiOp &theta, double tol) {
    AntiClass c = classify(theta, tol);
    if (c != AntiClass::Conjugation && c != AntiClass::Involution) {
        throw NotInvolutionError(std::string("expected an involution, got ") + to_string(c));
    }
    const Index d = theta.dim();
    Mat fx = detail::involution_fixed_vectors(theta, Mat::Identity(d, d));
    if (fx.cols() != d) throw NotInvolutionError("fixed space has wrong dimension");
    std::vector<Vec> out;
    for (Index k = 0; k < d; k++) out.push_back(fx.col(k));
    return out;
}

std::pair<AntiOp, AntiOp> unitary_as_two_conjugations(const LinOp &u, double tol) {
    if (!la::is_unitary(u.mat, tol)) throw NotUnitaryError("operator is not unitary");
    // eigenbasis φ_j of u; θ2 fixes it, θ1 multiplies by the eigenphases
    Eigen::ComplexSchur<Mat> schur(u.mat);
    const Mat &q = schur.matrixU();
    Vec eps = schur.matrixT().diagonal();
    for (Index k = 0; k < eps.size(); k++) eps(k) /= std::abs(eps(k));
    AntiOp t1(q * eps.asDiagonal() * q.transpose());
    AntiOp t2(q * q.transpose());
    return {t1, t2};
}

ConjugationFamily orthogonal_conjugation_family(int n) {
    if (n < 1) throw UnsupportedDimError("family needs n >= 1");
    PauliBasis p = pauli_basis();
    ConjugationFamily fam;
    long words = 1;
    for (int k = 0; k < n; k++) words *= 4;
    for (long w = 0; w < words; w++) {
        Mat m = Mat::Identity(1, 1);
        int zeros = 0;
        long rest = w;
        long place = words / 4;
        for (int k = 0; k < n; k++) {
            int digit = (int)(rest / place);
            rest %= place;
            place = std::max(place / 4, 1L);
            if (digit == 0) zeros++;
            m = la::kron(m, p.tau[digit].mat);
        }
        if (zeros % 2 == 0) {
            fam.conjugations.emplace_back(m);
        } else {
            fam.skew.emplace_back(m);
        }
    }
    return fam;
}

Mat skew_conjugation_basis(const AntiOp &theta, double tol) {
    if (classify(theta, tol) != AntiClass::SkewConjugation) {
        throw NotConjugationError("expected a skew conjugation");
    }
    const Index d = theta.dim();
    Mat rest = Mat::Identity(d, d);
    Mat out(d, d);
    for (Index k = 0; k < d / 2; k++) {
        Index best = 0;
        rest.colwise().norm().maxCoeff(&best);
        Vec a = rest.col(best).normalized();
        Vec b = theta(a);
        b.normalize();
        out.col(2 * k) = a;
        out.col(2 * k + 1) = b;
        rest -= a * (a.adjoint() * rest);
        rest -= b * (b.adjoint() * rest);
    }
    return out;
}

}  // namespace antilin
