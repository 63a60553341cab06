/* Copyright 2026 The qmpemba Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qmpemba {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Matrix6 = Eigen::Matrix<Complex, 6, 6>;

/// Superoperator acting on column-stacked density matrices (dim 16, 6 or 4).
using Superoperator = Eigen::MatrixXcd;

/// (p00, p01, p10, p11) in the basis |00>,|01>,|10>,|11>.
using PopulationVector = Eigen::Vector4d;

/// Absolute tolerance for operator identities (double precision, dim <= 16).
inline constexpr double kOperatorTol = 1e-12;

/// Column stacking: vec(rho)[i + 4j] = rho(i, j).
Eigen::VectorXcd vectorize(const Matrix4& m);
Matrix4 unvectorize(const Eigen::VectorXcd& v);

/// vec index of the elementary matrix |i><j|.
constexpr int vec_index(int i, int j) { return i + 4 * j; }

double max_abs(const Eigen::MatrixXcd& m);
bool approx_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                  double tol = kOperatorTol);
bool is_hermitian(const Matrix4& m, double tol = kOperatorTol);

/// Hermitian, unit trace, eigenvalues >= -tol.
bool is_valid_density_matrix(const Matrix4& m, double tol = kOperatorTol);
void require_density_matrix(const Matrix4& m, double tol = 1e-10);

PopulationVector populations_of(const Matrix4& rho);

}  // namespace qmpemba
