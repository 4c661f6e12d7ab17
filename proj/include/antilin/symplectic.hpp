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

#ifndef ANTILIN_SYMPLECTIC_HPP
#define ANTILIN_SYMPLECTIC_HPP

#include <vector>

#include "antilin/core.hpp"

namespace antilin {

/// t -> exp(itH) θ0 exp(-itH) = exp(2itH) θ0 for a conjugation θ0 and a
/// Hermitian H commuting with it.
class AcqLine {
   public:
    AcqLine(AntiOp base, LinOp generator) : base_(std::move(base)), gen_(std::move(generator)) {}

    const AntiOp &base() const { return base_; }
    const LinOp &generator() const { return gen_; }
    AntiOp at(double t) const;

   private:
    AntiOp base_;
    LinOp gen_;
};

AcqLine make_acq_line(const AntiOp &theta0, const LinOp &h, double tol = kDefaultTol);

/// a∘mid = mid∘b within tol.
bool quandle_check(const AntiOp &a, const AntiOp &mid, const AntiOp &b, double tol = kDefaultTol);

struct ConjugationCurve {
    std::vector<AntiOp> samples;
    bool closed = true;
};

/// Samples t_k = t0 + k(t1 - t0)/n for k = 0..n-1.
ConjugationCurve sample_closed(const AcqLine &line, double t0, double t1, int n);

/// Pre-rounding value (1/2πi) Σ Tr((θ_{i+1} - θ_i)θ_i) over the closed
/// polygon, real part. The imaginary part is second order in the step.
double maslov_sum(const ConjugationCurve &curve, double tol = kDefaultTol);

/// Rounded maslov_sum. Throws SamplingTooCoarse if a step unitary
/// θ_{i+1}θ_i has an eigenvalue in the left half plane or the sum is more
/// than `guard` away from an integer.
long maslov_index(const ConjugationCurve &curve, double guard = 0.1, double tol = kDefaultTol);

/// Length in the metric of the canonical form, ∫ (Tr θ̇²)^{1/2} dt =
/// 2(t1 - t0)(Tr H²)^{1/2}.
double curve_length(const AcqLine &line, double t0, double t1);

/// The conjugation fixing the real span of `basis` pointwise.
AntiOp conjugation_from_real_subspace(const std::vector<Vec> &basis, double tol = kDefaultTol);

}  // namespace antilin

#endif
