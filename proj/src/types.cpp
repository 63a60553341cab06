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

#include "qmpemba/types.hpp"

#include <stdexcept>

namespace qmpemba {

Eigen::VectorXcd vectorize(const Matrix4& m) {
  Eigen::VectorXcd v(16);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) v(vec_index(i, j)) = m(i, j);
  return v;
}

Matrix4 unvectorize(const Eigen::VectorXcd& v) {
  if (v.size() != 16) throw std::invalid_argument("unvectorize: need 16 entries");
  Matrix4 m;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) m(i, j) = v(vec_index(i, j));
  return m;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

bool approx_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

bool is_hermitian(const Matrix4& m, double tol) {
  return max_abs(m - m.adjoint()) <= tol;
}

bool is_valid_density_matrix(const Matrix4& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix4> es((m + m.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff() >= -tol;
}

void require_density_matrix(const Matrix4& m, double tol) {
  if (!m.allFinite()) throw std::runtime_error("density matrix has non-finite entries");
  if (!is_valid_density_matrix(m, tol))
    throw std::invalid_argument("not a density matrix (hermiticity/trace/positivity)");
}

PopulationVector populations_of(const Matrix4& rho) {
  PopulationVector p;
  for (int i = 0; i < 4; ++i) p(i) = rho(i, i).real();
  return p;
}

}  // namespace qmpemba
