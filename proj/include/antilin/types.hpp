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

#ifndef ANTILIN_TYPES_HPP
#define ANTILIN_TYPES_HPP

#include <complex>
#include <variant>

#include <Eigen/Dense>

#include "antilin/errors.hpp"

namespace antilin {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;

constexpr double kDefaultTol = 1e-9;

/// Linear operator, acting by v -> mat * v.
struct LinOp {
    Mat mat;

    LinOp() = default;
    explicit LinOp(Mat m);

    Index dim() const { return mat.rows(); }
    Vec operator()(const Vec &v) const;

    static LinOp identity(Index d);
};

/// Antilinear operator, acting by v -> mat * conj(v). Column j of mat is
/// the image of the j-th basis vector.
struct AntiOp {
    Mat mat;

    AntiOp() = default;
    explicit AntiOp(Mat m);

    Index dim() const { return mat.rows(); }
    Vec operator()(const Vec &v) const;

    /// Entrywise complex conjugation in the standard basis.
    static AntiOp standard(Index d);
};

using Op = std::variant<LinOp, AntiOp>;

/// Antilinear map from a dim_in space into a dim_out space.
struct AntiMap {
    Mat mat;  // dim_out x dim_in

    AntiMap() = default;
    explicit AntiMap(Mat m) : mat(std::move(m)) {}
    AntiMap(const AntiOp &op) : mat(op.mat) {}

    Index dim_in() const { return mat.cols(); }
    Index dim_out() const { return mat.rows(); }
    Vec operator()(const Vec &v) const;
};

/// Linear map from a dim_in space into a dim_out space.
struct LinMap {
    Mat mat;  // dim_out x dim_in

    LinMap() = default;
    explicit LinMap(Mat m) : mat(std::move(m)) {}
    LinMap(const LinOp &op) : mat(op.mat) {}

    Index dim_in() const { return mat.cols(); }
    Index dim_out() const { return mat.rows(); }
    Vec operator()(const Vec &v) const;
};

using TeleportMap = LinMap;

bool is_antilinear(const Op &op);
const Mat &matrix_of(const Op &op);
Index dim_of(const Op &op);

}  // namespace antilin

#endif
