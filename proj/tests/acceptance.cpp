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

// Acceptance checks. Each criterion prints one PASS/FAIL line; the exit
// status is nonzero if any line fails. Tolerances are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "testing.hpp"

using namespace antilin;
using namespace testing;

namespace {

constexpr double kSignTol = 1e-10;
constexpr double kSignatureSeconds = 1.0;
constexpr double kPauliTol = 1e-12;
constexpr double kWhvTol = 1e-8;
constexpr double kMaslovGuard = 0.02;
constexpr double kUetTol = 1e-10;
constexpr double kUetGap = 1e-3;
constexpr int kUetMinDiffer = 90;
constexpr double kCopositiveTol = 1e-9;
constexpr double kQuandleTol = 1e-9;
constexpr double kDetTol = 1e-9;
constexpr double kModularTol = 1e-9;
constexpr double kTeleportTol = 1e-10;
constexpr double kFidelityTol = 1e-9;
constexpr double kBellTol = 1e-12;
constexpr double kTwistTol = 1e-9;
constexpr double kAppendixTol = 1e-10;

struct Outcome {
    bool ok;
    std::string detail;
};

std::string fmt(const char *f, double a, double b = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

Outcome signature() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (Index d = 2; d <= 4; d++) {
        std::vector<AntiOp> basis;
        for (Index j = 0; j < d; j++)
            for (Index k = 0; k < d; k++) {
                Mat e = Mat::Zero(d, d);
                e(j, k) = 1;
                basis.emplace_back(e);
            }
        auto in = ao_space_inertia(basis, kSignTol);
        ok = ok && in.n_plus == d * (d + 1) / 2 && in.n_minus == d * (d - 1) / 2 && in.n_zero == 0;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {ok && secs < kSignatureSeconds, fmt("d=2..4 inertia, %.3fs", secs)};
}

Outcome pauli() {
    auto p = pauli_basis();
    double worst = 0;
    for (int j = 0; j < 4; j++)
        for (int k = 0; k < 4; k++) {
            Mat ac = (p.tau[j] * p.tau[k]).mat + (p.tau[k] * p.tau[j]).mat;
            worst = std::max(worst, max_abs(ac - 2.0 * p.g(j, k) * Mat::Identity(2, 2)));
            worst = std::max(worst, std::abs(canonical_form(p.tau[j], p.tau[k]) - 2.0 * p.g(j, k)));
        }
    return {worst <= kPauliTol, fmt("max error %.2e", worst)};
}

AntiOp rand_normal(Index d) {
    Mat n = Mat::Zero(d, d);
    Index c = 0;
    while (c < d) {
        if (c + 1 < d && uniform_int(0, 1)) {
            cplx z = std::polar(uniform(0.2, 3.0), uniform(0.05, std::numbers::pi - 0.05));
            n(c, c + 1) = z;
            n(c + 1, c) = std::conj(z);
            c += 2;
        } else {
            n(c, c) = uniform(0.2, 3.0);
            c += 1;
        }
    }
    Mat w = rand_unitary(d);
    return AntiOp(w * n * w.transpose());
}

Outcome whv() {
    double worst = 0;
    bool shapes = true;
    for (int trial = 0; trial < 200; trial++) {
        AntiOp t = rand_normal(uniform_int(2, 6));
        WhvForm f = whv_decompose(t);
        shapes = shapes && (Index)(f.blocks_1d.size() + 2 * f.blocks_2d.size()) == t.dim();
        worst = std::max(worst, rel_err(whv_reassemble(f).mat, t.mat));
    }
    for (Index d = 2; d <= 6; d++) {
        WhvForm f = whv_decompose(rand_conjugation(d));
        shapes = shapes && f.blocks_2d.empty() && (Index)f.blocks_1d.size() == d;
        for (double r : f.blocks_1d) shapes = shapes && std::abs(r - 1) < kWhvTol;
    }
    for (Index n = 1; n <= 3; n++) {
        Mat j = Mat::Zero(2 * n, 2 * n);
        for (Index k = 0; k < n; k++) {
            j(2 * k, 2 * k + 1) = -1;
            j(2 * k + 1, 2 * k) = 1;
        }
        Mat u = rand_unitary(2 * n);
        WhvForm f = whv_decompose(AntiOp(u * j * u.transpose()));
        shapes = shapes && f.blocks_1d.empty() && (Index)f.blocks_2d.size() == n;
        // the 2-D block with z = i is unitarily the τ0 pattern
        for (cplx z : f.blocks_2d) shapes = shapes && std::abs(z - cplx(0, 1)) < kWhvTol;
    }
    return {shapes && worst <= kWhvTol, fmt("max rel. error %.2e", worst)};
}

Outcome maslov() {
    const double pi = std::numbers::pi;
    const Index d = 3;
    Vec e = Vec::Unit(d, 0);
    auto gen = sample_closed(make_acq_line(AntiOp::standard(d), rank_one_lin(e, e)), 0, pi, 400);
    double raw = maslov_sum(gen);
    bool ok = maslov_index(gen, kMaslovGuard) == 1 && std::abs(raw - 1) < kMaslovGuard;
    int good = 0;
    for (int trial = 0; trial < 20; trial++) {
        const Index n = uniform_int(1, 5);
        Mat h = Mat::Zero(n, n);
        long want = 0, top = 1;
        for (Index k = 0; k < n; k++) {
            int v = uniform_int(-3, 3);
            h(k, k) = v;
            want += v;
            top = std::max<long>(top, std::abs(v));
        }
        auto curve = sample_closed(make_acq_line(AntiOp::standard(n), LinOp(h)), 0, pi, 128 * (int)top);
        good += maslov_index(curve) == want;
    }
    ConjugationCurve constant{std::vector<AntiOp>(16, rand_conjugation(4)), true};
    ok = ok && good == 20 && maslov_index(constant) == 0;
    return {ok, fmt("generator residual %.2e, integer loops %.0f/20", std::abs(raw - 1), good)};
}

Outcome uet() {
    bool ok = true;
    for (int trial = 0; trial < 100; trial++) {
        Mat s = rand_mat(3);
        s = (s + s.transpose()).eval();
        Mat u = rand_unitary(3);
        ok = ok && uet_test_dim3(LinOp(u * s * u.adjoint()), kUetTol);
        ok = ok && uet_test_dim3(LinOp(rand_hermitian(3)), kUetTol);
    }
    int differ = 0;
    for (int trial = 0; trial < 100; trial++) {
        auto [w1, w2] = uet_words_dim3(rand_lin(3));
        differ += std::abs(w1 - w2) > kUetGap;
    }
    return {ok && differ >= kUetMinDiffer, fmt("generic operators separated: %.0f/100", differ)};
}

Outcome copositive() {
    double worst = 0;
    bool lengths = true;
    for (int trial = 0; trial < 50; trial++) {
        const Index d = uniform_int(2, 5);
        const Index r = uniform_int(1, (int)d);
        Mat ui = rand_unitary(d), uo = rand_unitary(d);
        std::vector<Vec> in, out;
        for (Index k = 0; k < d; k++) {
            in.push_back(ui.col(k));
            out.push_back(uo.col(k));
        }
        Mat g = rand_mat(r, d);
        for (Index k = 0; k < d; k++) g.col(k).normalize();
        Mat beta = g.adjoint() * g;
        auto t = build_copositive(in, out, beta);
        lengths = lengths && t.length() == r;
        Mat ksum = Mat::Zero(d, d);
        for (const auto &v : t.kraus_anti) ksum += (adjoint(v) * v).mat;
        worst = std::max(worst, max_abs(ksum - t.k_op.mat));
        for (Index j = 0; j < d; j++)
            for (Index k = 0; k < d; k++) {
                LinOp x = rank_one_lin(in[j], in[k]);
                LinOp y = apply_copositive(t, x);
                worst = std::max(worst, max_abs(y.mat - beta(j, k) * rank_one_lin(out[k], out[j]).mat));
                worst = std::max(worst, std::abs(y.mat.trace() - (t.k_op.mat * x.mat).trace()));
            }
    }
    return {lengths && worst <= kCopositiveTol, fmt("max residual %.2e", worst)};
}

Outcome quandle() {
    double worst = 0, det_worst = 0;
    for (int pair = 0; pair < 20; pair++) {
        const Index d = uniform_int(1, 6);
        PositiveOp a(rand_positive(d)), b(rand_positive(d));
        PositiveOp m = geometric_mean(a, b);
        auto sa = metric_involution(a), sb = metric_involution(b), sm = metric_involution(m);
        for (int k = 0; k < 50; k++) {
            LinOp x = rand_lin(d);
            worst = std::max(worst, rel_err(sa(sm(x)).mat, sm(sb(x)).mat));
        }
        double lhs = m.mat.determinant().real();
        double rhs = std::sqrt(a.mat.determinant().real() * b.mat.determinant().real());
        det_worst = std::max(det_worst, std::abs(lhs - rhs) / rhs);
    }
    return {worst <= kQuandleTol && det_worst <= kDetTol, fmt("quandle %.2e, det %.2e", worst, det_worst)};
}

Outcome modular() {
    double worst = 0;
    for (int trial = 0; trial < 100; trial++) {
        const Index d = uniform_int(2, 5);
        Mat c = rand_mat(d);
        c /= c.norm();
        auto t = modular_from_bipartite(c);
        worst = std::max(worst, rel_err(t.s.mat, (t.j * LinOp(la::sqrt_psd(t.delta.mat))).mat));
        Mat ra = c * c.adjoint(), rb = c.transpose() * c.conjugate();
        worst = std::max(worst, rel_err(t.delta.mat, la::kron(ra, rb.inverse())));
        Vec v = BipartiteVector(c).vec();
        for (int k = 0; k < 20; k++) {
            Mat a = rand_mat(d);
            Vec lhs = t.s(la::kron(a, Mat::Identity(d, d)) * v);
            Vec rhs = la::kron(a.adjoint(), Mat::Identity(d, d)) * v;
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, rhs.cwiseAbs().maxCoeff()));
        }
    }
    return {worst <= kModularTol, fmt("max residual %.2e", worst)};
}

Outcome teleport() {
    double worst = 0, fid = 0;
    for (int trial = 0; trial < 100; trial++) {
        const Index da = uniform_int(1, 4), db = uniform_int(1, 4), dc = uniform_int(1, 4);
        Mat c1 = rand_mat(da, db), c2 = rand_mat(db, dc);
        BipartiteVector psi(c1 / c1.norm()), phi(c2 / c2.norm());
        TeleportMap t = teleport_map(phi, psi);
        Vec in = rand_vec(da);
        Vec pv = psi.vec();
        Vec proj = la::kron(pv * pv.adjoint(), Mat::Identity(dc, dc)) * oracle::kron_all({in, phi.vec()});
        worst = std::max(worst, (proj - oracle::kron_all({pv, t(in)})).cwiseAbs().maxCoeff());
        double f = uhlmann_fidelity(reduced_densities(psi).second.mat, reduced_densities(phi).first.mat);
        fid = std::max(fid, std::abs(teleport_fidelity(phi, psi) - f));
    }
    auto bell = BipartiteVector::max_entangled(2);
    auto p = pauli_basis();
    double bell_worst = 0;
    for (int trial = 0; trial < 10; trial++) {
        Vec state = oracle::kron_all({rand_unit(2), bell.vec()});
        double total = 0;
        for (int k = 0; k < 4; k++) {
            Mat sk = k == 0 ? Mat::Identity(2, 2) : p.sigma[k - 1].mat;
            double q = measure_project(BipartiteVector(sk * bell.coeffs), state, {2, 2, 2}, 0).second;
            bell_worst = std::max(bell_worst, std::abs(q - 0.25));
            total += q;
        }
        bell_worst = std::max(bell_worst, std::abs(total - 1));
    }
    bool ok = worst <= kTeleportTol && fid <= kFidelityTol && bell_worst <= kBellTol;
    char buf[160];
    std::snprintf(buf, sizeof buf, "oracle %.2e, fidelity %.2e, Bell %.2e", worst, fid, bell_worst);
    return {ok, buf};
}

Outcome twisted() {
    double worst = 0;
    for (int trial = 0; trial < 100; trial++) {
        const Index d = uniform_int(2, 4);
        Mat c = rand_mat(d);
        BipartiteVector psi(c / c.norm());
        auto [jba, jab] = jmaps(psi);
        worst = std::max(worst, rel_err(twisted_product(jab, jba).mat, modular_from_bipartite(psi.coeffs).j.mat));
        AntiMap tab(rand_mat(d)), tba(rand_mat(d));
        AntiOp tw = twisted_product(tab, tba);
        worst = std::max(worst, rel_err((tw * tw).mat, la::kron(compose(tab, tba).mat, compose(tba, tab).mat)));
    }
    return {worst <= kTwistTol, fmt("max rel. error %.2e", worst)};
}

Outcome appendix() {
    double worst = 0;
    for (Index d = 2; d <= 4; d++) {
        auto hb = hermitian_anti_basis(d), sb = skew_anti_basis(d);
        auto tp = ao_space_map(hb, canonical_inner(1));
        auto tm = ao_space_map(sb, canonical_inner(-1));
        auto remix = [&](const std::vector<AntiOp> &b) {
            Mat u = rand_unitary((Index)b.size());
            std::vector<AntiOp> out;
            for (Index j = 0; j < u.rows(); j++) {
                Mat m = Mat::Zero(d, d);
                for (Index k = 0; k < u.cols(); k++) m += u(j, k) * b[k].mat;
                out.emplace_back(m);
            }
            return out;
        };
        auto tp_mix = ao_space_map(remix(hb), canonical_inner(1));
        auto tm_mix = ao_space_map(remix(sb), canonical_inner(-1));
        for (int trial = 0; trial < 20; trial++) {
            Mat x = rand_mat(d);
            Mat one = Mat::Identity(d, d);
            worst = std::max(worst, max_abs(apply_copositive(tp, LinOp(x)).mat - 0.5 * (x.trace() * one + x)));
            worst = std::max(worst, max_abs(apply_copositive(tm, LinOp(x)).mat - 0.5 * (x.trace() * one - x)));
            worst = std::max(worst, max_abs(apply_copositive(tp_mix, LinOp(x)).mat - apply_copositive(tp, LinOp(x)).mat));
            worst = std::max(worst, max_abs(apply_copositive(tm_mix, LinOp(x)).mat - apply_copositive(tm, LinOp(x)).mat));
        }
    }
    return {worst <= kAppendixTol, fmt("max error %.2e", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"canonical-form signature", signature},
        {"Pauli algebra", pauli},
        {"WHV round trip", whv},
        {"Maslov index", maslov},
        {"dim-3 UET criterion", uet},
        {"copositive construction", copositive},
        {"geometric-mean quandle", quandle},
        {"modular identities", modular},
        {"teleportation", teleport},
        {"twisted products", twisted},
        {"appendix maps", appendix},
    };
    int failed = 0;
    int n = 0;
    for (const auto &[name, run] : criteria) {
        n++;
        Outcome o{false, ""};
        try {
            o = run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", n, name, o.detail.c_str());
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
