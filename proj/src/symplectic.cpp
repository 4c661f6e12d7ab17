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

#include "antilin/symplectic.hpp"

#include <cmath>
#include <numbers>

#include "antilin/decomp.hpp"
#include "antilin/linalg.hpp"

namespace antilin {

AntiOp AcqLine::at(double t) const {
    LinOp u(la::expi_herm(gen_.mat, t));
    LinOp ui(la::expi_herm(gen_.mat, -t));
    return u * base_ * ui;
}

AcqLine make_acq_line(const AntiOp &theta0, const LinOp &h, double tol) {
    if (theta0.dim() != h.dim()) throw DimError("generator and base differ in dimension");
    if (classify(theta0, tol) != AntiClass::Conjugation) {
        throw NotConjugationError("base of an acq-line must be a conjugation");
    }
    if (!la::is_hermitian(h.mat, tol)) throw NotHermitianError("generator must be Hermitian");
    double sc = std::max(1.0, la::max_abs(h.mat));
    if (la::max_abs((h * theta0).mat - (theta0 * h).mat) > tol * sc) {
        throw CommutationError("generator does not commute with the base");
    }
    return AcqLine(theta0, h);
}

bool quandle_check(const AntiOp &a, const AntiOp &mid, const AntiOp &b, double tol) {
    if (a.dim() != mid.dim() || mid.dim() != b.dim()) throw DimError("dimension mismatch");
    double sc = std::max({1.0, la::max_abs(a.mat), la::max_abs(mid.mat), la::max_abs(b.mat)});
    return la::max_abs((a * mid).mat - (mid * b).mat) <= tol * sc * sc;
}

ConjugationCurve sample_closed(const AcqLine &line, double t0, double t1, int n) {
    ConjugationCurve c;
    c.closed = true;
    for (int k = 0; k < n; k++) c.samples.push_back(line.at(t0 + (t1 - t0) * k / n));
    return c;
}

namespace {

void check_curve(const ConjugationCurve &curve, double tol) {
    if (!curve.closed) throw NotClosedError("Maslov index needs a closed curve");
    if (curve.samples.empty()) throw DimError("empty curve");
    const Index d = curve.samples.front().dim();
    for (const auto &s : curve.samples) {
        if (s.dim() != d) throw DimError("samples differ in dimension");
        if (classify(s, std::max(tol, 1e-8)) != AntiClass::Conjugation) {
            throw NotConjugationError("curve sample is not a conjugation");
        }
    }
}

}  // namespace

double maslov_sum(const ConjugationCurve &curve, double tol) {
    check_curve(curve, tol);
    const auto &s = curve.samples;
    const size_t n = s.size();
    cplx acc = 0;
    for (size_t i = 0; i < n; i++) {
        const AntiOp &a = s[i];
        const AntiOp &b = s[(i + 1) % n];
        acc += compose(b - a, a).mat.trace();
    }
    return (acc / cplx(0, 2 * std::numbers::pi)).real();
}

long maslov_index(const ConjugationCurve &curve, double guard, double tol) {
    check_curve(curve, tol);
    const auto &s = curve.samples;
    const size_t n = s.size();
    for (size_t i = 0; i < n; i++) {
        Mat step = compose(s[(i + 1) % n], s[i]).mat;
        Eigen::ComplexEigenSolver<Mat> es(step, false);
        if (es.eigenvalues().real().minCoeff() < 0) {
            throw SamplingTooCoarse("consecutive samples are too far apart");
        }
    }
    double raw = maslov_sum(curve, tol);
    double r = std::round(raw);
    if (std::abs(raw - r) > guard) {
        throw SamplingTooCoarse("Maslov sum " + std::to_string(raw) + " is not close to an integer");
    }
    return (long)r;
}

double curve_length(const AcqLine &line, double t0, double t1) {
    if (t1 < t0) throw DimError("curve_length needs t1 >= t0");
    const Mat &h = line.generator().mat;
    double hs = (h * h).trace().real();
    return 2 * (t1 - t0) * std::sqrt(std::max(hs, 0.0));
}

AntiOp conjugation_from_real_subspace(const std::vector<Vec> &basis, double tol) {
    if (basis.empty()) throw DimError("empty basis");
    const Index d = basis.front().size();
    if ((Index)basis.size() != d) throw NotLagrangianError("need exactly dim vectors");
    Mat phi(d, d);
    for (Index k = 0; k < d; k++) {
        if (basis[k].size() != d) throw DimError("vector length mismatch");
        phi.col(k) = basis[k];
    }
    for (Index j = 0; j < d; j++) {
        for (Index k = j + 1; k < d; k++) {
            double im = inner(basis[j], basis[k]).imag();
            if (std::abs(im) > tol * basis[j].norm() * basis[k].norm()) {
                throw NotLagrangianError("scalar products are not real");
            }
        }
    }
    Eigen::VectorXd sv = la::singular_values(phi);
    if (sv(d - 1) <= tol * sv(0)) throw NotLagrangianError("vectors are not independent");
    // θ(Φc) = Φ conj(c)  =>  M conj(Φ) = Φ
    return AntiOp(phi * phi.conjugate().inverse());
}

}  // namespace antilin
