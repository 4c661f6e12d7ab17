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

#ifndef ANTILIN_DECOMP_HPP
#define ANTILIN_DECOMP_HPP

#include <string>
#include <utility>
#include <vector>

#include "antilin/core.hpp"

namespace antilin {

/// θ = left·modulus_right = modulus·right with modulus = √(θθ†) and
/// modulus_right = √(θ†θ). For singular θ the antiunitary parts are partial
/// isometries supported on the range of θ†.
struct PolarParts {
    AntiOp left;
    LinOp modulus;
    AntiOp right;
    LinOp modulus_right;
};

PolarParts polar_anti(const AntiOp &theta, double tol = kDefaultTol);

/// Block form of a normal antilinear operator. In the orthonormal basis
/// given by the columns of `basis` the operator has 1x1 blocks r ≥ 0 first,
/// then 2x2 blocks [[0, z], [conj z, 0]] with z in the open upper half
/// plane and Re z ≥ 0. For a 2-block spanned by (φ', φ'') this means
/// θφ' = conj(z)φ'' and θφ'' = zφ'.
struct WhvForm {
    std::vector<double> blocks_1d;
    std::vector<cplx> blocks_2d;
    Mat basis;
};

WhvForm whv_decompose(const AntiOp &theta, double tol = kDefaultTol);
/// Block-diagonal matrix of the form in its own basis.
Mat whv_block_matrix(const WhvForm &form);
AntiOp whv_reassemble(const WhvForm &form);

enum class AntiClass {
    Conjugation,
    SkewConjugation,
    Antiunitary,
    Involution,
    SkewInvolution,
    HermitianAnti,
    SkewHermitianAnti,
    Normal,
    General,
};

const char *to_string(AntiClass c);
/// Most specific label whose defining identities hold within tol.
AntiClass classify(const AntiOp &theta, double tol = kDefaultTol);

struct InvolutionParts {
    LinOp modulus;     // |S| = (SS†)^{1/2}
    AntiOp conj_part;  // S = |S|·θ = θ·|S|⁻¹
    bool skew;         // S² = -1
};

InvolutionParts involution_polar(const AntiOp &s, double tol = kDefaultTol);

bool is_diagonalizable(const AntiOp &theta, double tol = kDefaultTol);

/// Real basis of {φ : θφ = φ}, orthonormal for the real part of the scalar
/// product. For a conjugation the vectors are orthonormal.
std::vector<Vec> fixed_real_subspace(const AntiOp &theta, double tol = kDefaultTol);

/// Conjugations (θ1, θ2) with θ1θ2 = u.
std::pair<AntiOp, AntiOp> unitary_as_two_conjugations(const LinOp &u, double tol = kDefaultTol);

struct ConjugationFamily {
    std::vector<AntiOp> conjugations;
    std::vector<AntiOp> skew;
};

/// Tensor words in τ0..τ3 on (C²)^{⊗n}; words with an even number of τ0
/// factors are conjugations, the others skew conjugations.
ConjugationFamily orthogonal_conjugation_family(int n);

/// Orthonormal basis with θφ_{2k-1} = φ_{2k}, θφ_{2k} = -φ_{2k-1} (columns,
/// zero-based pairs (0,1), (2,3), ...).
Mat skew_conjugation_basis(const AntiOp &theta, double tol = kDefaultTol);

}  // namespace antilin

#endif
