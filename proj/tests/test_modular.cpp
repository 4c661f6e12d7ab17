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

#include <doctest.h>

#include "testing.hpp"

using namespace antilin;
using namespace testing;

namespace {

PositiveOp rand_pos(Index d) { return PositiveOp(rand_positive(d)); }

// Off-block part of an operator on A⊗B relative to B(H^A)⊗1.
double off_a_block(const Mat &m, Index da, Index db) {
    // project onto X⊗1 via partial trace over B
    Mat xa = Mat::Zero(da, da);
    for (Index j = 0; j < da; j++)
        for (Index l = 0; l < da; l++)
            for (Index k = 0; k < db; k++) xa(j, l) += m(j * db + k, l * db + k);
    xa /= (double)db;
    return max_abs(m - la::kron(xa, Mat::Identity(db, db)));
}

double off_b_block(const Mat &m, Index da, Index db) {
    Mat xb = Mat::Zero(db, db);
    for (Index k = 0; k < db; k++)
        for (Index l = 0; l < db; l++)
            for (Index j = 0; j < da; j++) xb(k, l) += m(j * db + k, j * db + l);
    xb /= (double)da;
    return max_abs(m - la::kron(Mat::Identity(da, da), xb));
}

Mat ordered_eigs(const Mat &h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(la::hermitian_part(h));
    return es.eigenvalues().cast<cplx>();
}

}  // namespace

TEST_SUITE("modular") {

TEST_CASE("positive operators") {
    CHECK_THROWS_AS(PositiveOp(Mat::Identity(2, 3)), DimError);
    Mat h(2, 2);
    h << 1, 0, 0, -1;
    CHECK_THROWS_AS(PositiveOp{h}, NotPositiveError);
    CHECK_THROWS_AS(PositiveOp(rand_mat(2)), NotPositiveError);
    CHECK_THROWS_AS(PositiveOp(Mat::Zero(2, 2)), NotPositiveError);
}

TEST_CASE("geometric mean") {
    for (int trial = 0; trial < 100; trial++) {
        const Index d = uniform_int(1, 6);
        PositiveOp a = rand_pos(d), b = rand_pos(d);
        Mat c = geometric_mean(a, b).mat;
        CHECK(rel_err(geometric_mean(a, a).mat, a.mat) < 1e-10);
        CHECK(rel_err(geometric_mean(PositiveOp(Mat::Identity(d, d)), b).mat, la::sqrt_psd(b.mat)) < 1e-10);
        double lhs = c.determinant().real();
        double rhs = std::sqrt(a.mat.determinant().real() * b.mat.determinant().real());
        CHECK(std::abs(lhs - rhs) <= 1e-9 * rhs);
        CHECK(rel_err(c * a.mat.inverse() * c, b.mat) < 1e-9);
        Mat c2 = geometric_mean(b, a).mat;
        CHECK(rel_err(c2, c) < 1e-9);
        CHECK(rel_err(c2 * b.mat.inverse() * c2, a.mat) < 1e-9);
        CHECK(la::min_eigenvalue(c) > 0);
    }
    CHECK_THROWS_AS(geometric_mean(rand_pos(2), rand_pos(3)), DimError);
}

TEST_CASE("metric involution") {
    LinOp x = rand_lin(3);
    auto s1 = metric_involution(PositiveOp(Mat::Identity(3, 3)));
    CHECK(max_abs(s1(x).mat - x.mat.adjoint()) < 1e-15);
    for (int trial = 0; trial < 50; trial++) {
        const Index d = uniform_int(2, 5);
        PositiveOp a = rand_pos(d), b = rand_pos(d);
        auto sa = metric_involution(a);
        auto sb = metric_involution(b);
        auto sm = metric_involution(geometric_mean(a, b));
        LinOp y = rand_lin(d);
        CHECK(rel_err(sa(sa(y)).mat, y.mat) < 1e-9);
        // adjoint w.r.t. ⟨u,v⟩_A = ⟨u, A v⟩
        Vec u = rand_vec(d), v = rand_vec(d);
        cplx lhs = inner(u, a.mat * (y.mat * v));
        cplx rhs = inner(sa(y).mat * u, a.mat * v);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(lhs)));
        CHECK(rel_err(sa(sm(y)).mat, sm(sb(y)).mat) < 1e-9);
    }
    CHECK_THROWS_AS(metric_involution(rand_pos(2))(rand_lin(3)), DimError);
}

TEST_CASE("metric acq line") {
    for (int trial = 0; trial < 30; trial++) {
        const Index d = uniform_int(2, 4);
        PositiveOp a = rand_pos(d), b = rand_pos(d);
        LinOp x = rand_lin(d);
        CHECK(rel_err(metric_acq_line(a, b, 0)(x).mat, metric_involution(a)(x).mat) < 1e-9);
        CHECK(rel_err(metric_acq_line(a, b, 1)(x).mat, metric_involution(b)(x).mat) < 1e-9);
        CHECK(rel_err(metric_point(a, a, uniform(-2, 2)).mat, a.mat) < 1e-9);
        double r = uniform(-1, 2), t = uniform(-1, 2);
        PositiveOp cr = metric_point(a, b, r), ct = metric_point(a, b, t);
        CHECK(rel_err(metric_point(a, b, 0.5 * (r + t)).mat, geometric_mean(cr, ct).mat) < 1e-8);
        CHECK(rel_err(metric_point(a, b, 0.5).mat, geometric_mean(a, b).mat) < 1e-9);
        // S_r S_{(r+t)/2} = S_{(r+t)/2} S_t
        auto sr = metric_acq_line(a, b, r), st = metric_acq_line(a, b, t);
        auto sm = metric_acq_line(a, b, 0.5 * (r + t));
        CHECK(rel_err(sr(sm(x)).mat, sm(st(x)).mat) < 1e-8);
    }
}

TEST_CASE("modular objects of a bipartite vector") {
    for (Index d = 2; d <= 4; d++) {
        auto t = modular_from_bipartite(BipartiteVector::max_entangled(d).coeffs);
        CHECK(max_abs(t.delta.mat - Mat::Identity(d * d, d * d)) < 1e-12);
        CHECK(max_abs(t.s.mat - t.j.mat) < 1e-12);
    }
    {
        const double p = 0.3;
        Mat c = Mat::Zero(2, 2);
        c(0, 0) = std::sqrt(p);
        c(1, 1) = std::sqrt(1 - p);
        Mat u = rand_unitary(2), v = rand_unitary(2);
        auto t = modular_from_bipartite(u * c * v.transpose());
        Eigen::VectorXd ev = ordered_eigs(t.delta.mat).real();
        std::vector<double> want = {p / (1 - p), 1, 1, (1 - p) / p};
        for (int k = 0; k < 4; k++) CHECK(std::abs(ev(k) - want[k]) < 1e-10);
    }
    for (int trial = 0; trial < 100; trial++) {
        const Index d = uniform_int(2, 4);
        const Index n = d * d;
        BipartiteVector psi(rand_mat(d) * uniform(0.5, 3));
        auto t = modular_from_bipartite(psi.coeffs);
        Mat one = Mat::Identity(n, n);
        CHECK(max_abs((t.j * t.j).mat - one) < 1e-10);
        CHECK(classify(t.j, 1e-8) == AntiClass::Conjugation);
        CHECK(rel_err(t.s.mat, (t.j * LinOp(la::sqrt_psd(t.delta.mat))).mat) < 1e-9);
        CHECK(max_abs((t.s * t.s).mat - one) < 1e-8);
        // Δ = ρ^A ⊗ (ρ^B)^{-1}
        Mat c = psi.coeffs;
        Mat ra = c * c.adjoint(), rb = c.transpose() * c.conjugate();
        CHECK(rel_err(t.delta.mat, la::kron(ra, rb.inverse())) < 1e-8);
        Vec v = psi.vec();
        Mat a = rand_mat(d);
        Mat a1 = la::kron(a, Mat::Identity(d, d));
        Mat a1d = la::kron(a.adjoint(), Mat::Identity(d, d));
        CHECK((t.s(a1 * v) - a1d * v).norm() < 1e-9 * (1 + v.norm() * a.norm()));
        // commutant
        CHECK(off_b_block((t.s * LinOp(a1) * t.s).mat, d, d) < 1e-8 * a.norm());
        CHECK(off_b_block((t.j * LinOp(a1) * t.j).mat, d, d) < 1e-9 * a.norm());
        // modular group
        double s = uniform(-3, 3);
        Mat logd = Mat::Zero(n, n);
        {
            Eigen::SelfAdjointEigenSolver<Mat> es(t.delta.mat);
            logd = es.eigenvectors() * es.eigenvalues().array().log().matrix().cast<cplx>().asDiagonal() *
                   es.eigenvectors().adjoint();
        }
        Mat git = la::expi_herm(logd, s);
        CHECK(off_a_block(git * a1 * git.adjoint(), d, d) < 1e-8 * a.norm());
        // S† on the commutant
        Mat b = rand_mat(d);
        Mat b1 = la::kron(Mat::Identity(d, d), b), b1d = la::kron(Mat::Identity(d, d), b.adjoint());
        CHECK((adjoint(t.s)(b1 * v) - b1d * v).norm() < 1e-8 * (1 + v.norm() * b.norm()));
        // real subspaces: Δ^{-1/4} maps J-fixed vectors to S-fixed ones
        Mat dq = la::pow_pd(t.delta.mat, -0.25);
        for (const Vec &h : fixed_real_subspace(t.j, 1e-8)) {
            CHECK((t.j(h) - h).norm() < 1e-8);
            Vec g = dq * h;
            CHECK((t.s(g) - g).norm() < 1e-8 * (1 + g.norm()));
        }
    }
    CHECK_THROWS_AS(modular_from_bipartite(Mat::Ones(2, 2)), NotSeparatingError);
    CHECK_THROWS_AS(modular_from_bipartite(rand_mat(2, 3)), DimError);
}

TEST_CASE("commutative modular objects") {
    auto t = modular_commutative({1.0, 1.0, 1.0});
    CHECK(max_abs(t.s.mat - Mat::Identity(3, 3)) == 0.0);
    CHECK(max_abs(t.delta.mat - Mat::Identity(3, 3)) == 0.0);
    for (int trial = 0; trial < 50; trial++) {
        const int d = uniform_int(1, 5);
        std::vector<cplx> e1, e2;
        for (int k = 0; k < d; k++) {
            e1.push_back(rand_phase());
            e2.push_back(rand_phase());
        }
        auto mid = commutative_midpoint(e1, e2);
        auto s1 = modular_commutative(e1).s, s2 = modular_commutative(e2).s, sm = modular_commutative(mid).s;
        CHECK(max_abs((s1 * sm).mat - (sm * s2).mat) < 1e-12);
        CHECK(max_abs(modular_commutative(e1).delta.mat - Mat::Identity(d, d)) == 0.0);
        CHECK(max_abs((s1 * s1).mat - Mat::Identity(d, d)) < 1e-14);
    }
    CHECK_THROWS_AS(modular_commutative({1.0, 2.0}), NotUnimodularError);
    CHECK_THROWS_AS(commutative_midpoint({1.0}, {1.0, 1.0}), DimError);
}

TEST_CASE("modular geometric mean") {
    // shared J: the standard conjugation in a fixed Schmidt basis
    for (int trial = 0; trial < 30; trial++) {
        const Index d = uniform_int(2, 3);
        Mat u = rand_unitary(d), v = rand_unitary(d);
        auto make = [&](const Eigen::VectorXd &sv) {
            Mat c = u * sv.cast<cplx>().asDiagonal() * v.transpose();
            return modular_from_bipartite(c);
        };
        Eigen::VectorXd p1 = Eigen::VectorXd::Random(d).array().abs() + 0.2;
        Eigen::VectorXd p2 = Eigen::VectorXd::Random(d).array().abs() + 0.2;
        auto t1 = make(p1), t2 = make(p2);
        REQUIRE(max_abs(t1.j.mat - t2.j.mat) < 1e-10);
        auto same = modular_geomean(t1, t1, 1e-9);
        CHECK(rel_err(same.s.mat, t1.s.mat) < 1e-9);
        auto g = modular_geomean(t1, t2, 1e-9);
        CHECK(rel_err((t1.s * g.s).mat, (g.s * t2.s).mat) < 1e-9);
        // commuting Δ's: Δ = (Δ1Δ2)^{1/2} and ΔΔ1⁻¹Δ = Δ2
        CHECK(rel_err(g.delta.mat, la::sqrt_psd(la::hermitian_part(t1.delta.mat * t2.delta.mat))) < 1e-9);
        CHECK(rel_err(g.delta.mat * t1.delta.mat.inverse() * g.delta.mat, t2.delta.mat) < 1e-9);
        CHECK(rel_err(g.s.mat, (g.j * LinOp(la::sqrt_psd(g.delta.mat))).mat) < 1e-9);
    }
    // non-commuting Δ's sharing J: Δ = exp(K) with JKJ = -K
    for (int trial = 0; trial < 30; trial++) {
        const Index d = uniform_int(2, 5);
        AntiOp j = rand_conjugation(d);
        auto triple = [&]() {
            Mat h = rand_hermitian(d) * 0.6;
            Mat k = h - (j * LinOp(h) * j).mat;
            Eigen::SelfAdjointEigenSolver<Mat> es(la::hermitian_part(k));
            Mat delta = es.eigenvectors() * es.eigenvalues().array().exp().matrix().cast<cplx>().asDiagonal() *
                        es.eigenvectors().adjoint();
            PositiveOp dp(la::hermitian_part(delta));
            return ModularTriple{j * LinOp(la::sqrt_psd(dp.mat)), dp, j};
        };
        auto t1 = triple(), t2 = triple();
        CHECK(max_abs((t1.s * t1.s).mat - Mat::Identity(d, d)) < 1e-9);
        auto g = modular_geomean(t1, t2, 1e-9);
        CHECK(rel_err((t1.s * g.s).mat, (g.s * t2.s).mat) < 1e-9);
        CHECK(max_abs((g.s * g.s).mat - Mat::Identity(d, d)) < 1e-9);
    }
    auto a = modular_from_bipartite(rand_mat(2));
    auto b = modular_from_bipartite(rand_mat(2));
    CHECK_THROWS_AS(modular_geomean(a, b), IncompatibleError);
}

}  // TEST_SUITE
