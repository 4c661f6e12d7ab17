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

#ifndef ANTILIN_CORE_HPP
#define ANTILIN_CORE_HPP

#include <array>
#include <utility>
#include <vector>

#include "antilin/types.hpp"

namespace antilin {

/// Scalar product, antilinear in the first argument.
inline cplx inner(const Vec &a, const Vec &b) { return a.dot(b); }

Vec apply_anti(const AntiOp &theta, const Vec &v);
Vec apply_lin(const LinOp &a, const Vec &v);
Vec apply(const Op &x, const Vec &v);

// x∘y. The product of two antilinear factors is linear, a mixed product is
// antilinear.
LinOp compose(const LinOp &x, const LinOp &y);
AntiOp compose(const LinOp &x, const AntiOp &y);
AntiOp compose(const AntiOp &x, const LinOp &y);
LinOp compose(const AntiOp &x, const AntiOp &y);
Op compose(const Op &x, const Op &y);

LinMap compose(const LinMap &x, const LinMap &y);
AntiMap compose(const LinMap &x, const AntiMap &y);
AntiMap compose(const AntiMap &x, const LinMap &y);
LinMap compose(const AntiMap &x, const AntiMap &y);

LinOp operator*(const LinOp &x, const LinOp &y);
AntiOp operator*(const LinOp &x, const AntiOp &y);
AntiOp operator*(const AntiOp &x, const LinOp &y);
LinOp operator*(const AntiOp &x, const AntiOp &y);

AntiOp operator*(cplx c, const AntiOp &x);
LinOp operator*(cplx c, const LinOp &x);
AntiOp operator+(const AntiOp &x, const AntiOp &y);
AntiOp operator-(const AntiOp &x, const AntiOp &y);
LinOp operator+(const LinOp &x, const LinOp &y);
LinOp operator-(const LinOp &x, const LinOp &y);

/// Hermitian adjoint. For antilinear operators this is the plain transpose
/// of the matrix and depends complex-linearly on the operator.
LinOp adjoint(const LinOp &x);
AntiOp adjoint(const AntiOp &x);
Op adjoint(const Op &x);
LinMap adjoint(const LinMap &x);
AntiMap adjoint(const AntiMap &x);

/// (θ1, θ2) = Tr θ2θ1.
cplx canonical_form(const AntiOp &theta1, const AntiOp &theta2);

/// (θ⁺, θ⁻) with θ⁺ Hermitian and θ⁻ skew-Hermitian.
std::pair<AntiOp, AntiOp> hermitian_split(const AntiOp &theta);

/// |out⟩⟨in|_c : φ -> ⟨φ, in⟩ out.
AntiOp rank_one_anti(const Vec &phi_out, const Vec &phi_in);
/// |out⟩⟨in| : φ -> ⟨in, φ⟩ out.
LinOp rank_one_lin(const Vec &phi_out, const Vec &phi_in);

double operator_norm(const LinOp &x);
double operator_norm(const AntiOp &x);
double operator_norm(const Op &x);

/// Radius of the disk {⟨φ, θφ⟩ : |φ| = 1}.
double field_of_values_radius(const AntiOp &theta);

struct EigenCircle {
    double radius;
    int multiplicity;
    /// Columns φ with θφ = radius·φ.
    Mat eigenvectors;
};

struct EigenStructure {
    /// Sorted by decreasing radius.
    std::vector<EigenCircle> circles;
    bool diagonalizable;
};

/// Eigenvalues of an antilinear operator come in circles: if θφ = aφ then
/// θ(zφ) = a·conj(z)/z·(zφ). Each circle is reported by its radius |a|.
EigenStructure eigen_structure(const AntiOp &theta, double tol = kDefaultTol);

struct PauliBasis {
    std::array<LinOp, 3> sigma;
    std::array<AntiOp, 4> tau;
    Eigen::Matrix4d g;
};

/// σ1..σ3 and τ0..τ3 in the standard basis of C².
PauliBasis pauli_basis();

bool is_normal(const AntiOp &theta, double tol = kDefaultTol);
/// max|θ†θ - θθ†| and 2·max|θ⁺θ⁻ - θ⁻θ⁺|, which agree.
std::pair<double, double> normality_defects(const AntiOp &theta);

namespace detail {
/// Real-orthonormal (w.r.t. Re⟨.,.⟩) basis of the fixed vectors of the
/// antilinear involution `j` restricted to the span of the orthonormal
/// columns of `span`. Returns span.cols() vectors.
Mat involution_fixed_vectors(const AntiOp &j, const Mat &span);
}  // namespace detail

}  // namespace antilin

#endif
