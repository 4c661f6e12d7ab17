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

#ifndef ANTILIN_LINALG_HPP
#define ANTILIN_LINALG_HPP

#include <functional>
#include <vector>

#include "antilin/types.hpp"

// Dense helpers shared by the modules. Functions of Hermitian matrices go
// through the self-adjoint eigensolver, everything else through SVD.
namespace antilin::la {

double max_abs(const Mat &m);
Mat hermitian_part(const Mat &m);
bool is_hermitian(const Mat &m, double tol);
bool is_unitary(const Mat &m, double tol);

/// f(H) for Hermitian H.
Mat herm_apply(const Mat &h, const std::function<double(double)> &f);
/// exp(i t H) for Hermitian H.
Mat expi_herm(const Mat &h, double t);
/// Principal square root of a positive semi-definite matrix. Throws
/// NotPositiveError if an eigenvalue is below -tol * scale.
Mat sqrt_psd(const Mat &p, double tol = kDefaultTol);
/// P^t for positive definite P. Throws NotPositiveError otherwise.
Mat pow_pd(const Mat &p, double t, double tol = kDefaultTol);
double min_eigenvalue(const Mat &h);

Eigen::VectorXd singular_values(const Mat &m);
double op_norm(const Mat &m);
double trace_norm(const Mat &m);
Index numerical_rank(const Mat &m, double abs_tol);
/// Orthonormal basis of the kernel, columns.
Mat null_space(const Mat &m, double abs_tol);

Mat kron(const Mat &a, const Mat &b);

/// Groups indices of `vals` whose entries lie within `tol` of each other
/// (single linkage). Groups are ordered by first appearance.
std::vector<std::vector<Index>> cluster(const Eigen::VectorXcd &vals, double tol);

}  // namespace antilin::la

#endif
