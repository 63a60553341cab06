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

#include "qmpemba/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace qmpemba {

namespace {
const Complex kI(0.0, 1.0);
}

Matrix2 single_spin_operator(Axis axis) {
  Matrix2 m = Matrix2::Zero();
  switch (axis) {
    case Axis::x:
      m(0, 1) = 0.5;
      m(1, 0) = 0.5;
      break;
    case Axis::y:
      m(0, 1) = -0.5 * kI;
      m(1, 0) = 0.5 * kI;
      break;
    case Axis::z:
      m(0, 0) = 0.5;
      m(1, 1) = -0.5;
      break;
    case Axis::plus:
      m(0, 1) = 1.0;
      break;
    case Axis::minus:
      m(1, 0) = 1.0;
      break;
  }
  return m;
}

Matrix4 spin_operator(int spin_index, Axis axis) {
  const Matrix2 s = single_spin_operator(axis);
  const Matrix2 id = Matrix2::Identity();
  if (spin_index == 1) return Eigen::kroneckerProduct(s, id);
  if (spin_index == 2) return Eigen::kroneckerProduct(id, s);
  throw std::invalid_argument("spin_index must be 1 or 2");
}

Matrix4 spin_dot_product() {
  Matrix4 d = Matrix4::Zero();
  for (Axis a : {Axis::x, Axis::y, Axis::z})
    d += spin_operator(1, a) * spin_operator(2, a);
  return d;
}

Matrix4 spherical_tensor(int m) {
  const Matrix4 i1z = spin_operator(1, Axis::z);
  const Matrix4 i2z = spin_operator(2, Axis::z);
  switch (m) {
    case 0:
      return (3.0 * i1z * i2z - spin_dot_product()) / std::sqrt(6.0);
    case 1:
      return -0.5 * (spin_operator(1, Axis::plus) * i2z + i1z * spin_operator(2, Axis::plus));
    case -1:
      return +0.5 * (spin_operator(1, Axis::minus) * i2z + i1z * spin_operator(2, Axis::minus));
    case 2:
      return 0.5 * spin_operator(1, Axis::plus) * spin_operator(2, Axis::plus);
    case -2:
      return 0.5 * spin_operator(1, Axis::minus) * spin_operator(2, Axis::minus);
    default:
      throw std::domain_error("spherical_tensor: |m| must be <= 2");
  }
}

Matrix4 spherical_tensor_field(int m, int spin_index) {
  switch (m) {
    case 0:
      return (2.0 / std::sqrt(6.0)) * spin_operator(spin_index, Axis::z);
    case 1:
      return -0.5 * spin_operator(spin_index, Axis::plus);
    case -1:
      return +0.5 * spin_operator(spin_index, Axis::minus);
    case 2:
    case -2:
      return Matrix4::Zero();  // A_z B_{+-} terms vanish for the static field
    default:
      throw std::domain_error("spherical_tensor_field: |m| must be <= 2");
  }
}

Matrix4 rotation_pulse(double angle, PulseAxis axis, PulseTarget target) {
  double sign = 1.0;
  Axis base = Axis::x;
  switch (axis) {
    case PulseAxis::x: base = Axis::x; break;
    case PulseAxis::y: base = Axis::y; break;
    case PulseAxis::minus_x: base = Axis::x; sign = -1.0; break;
    case PulseAxis::minus_y: base = Axis::y; sign = -1.0; break;
  }
  Matrix4 gen;
  switch (target) {
    case PulseTarget::spin1: gen = spin_operator(1, base); break;
    case PulseTarget::spin2: gen = spin_operator(2, base); break;
    case PulseTarget::both: gen = spin_operator(1, base) + spin_operator(2, base); break;
    default: throw std::invalid_argument("rotation_pulse: bad target");
  }
  Matrix4 arg = -kI * angle * sign * gen;
  return arg.exp();
}

int coherence_order(int row, int col) {
  static constexpr int mz[4] = {1, 0, 0, -1};  // 2 * <ab| I1z + I2z |ab>
  return mz[row] - mz[col];
}

std::array<CoherenceComponent, 5> coherence_decompose(const Matrix4& m) {
  std::array<CoherenceComponent, 5> out;
  for (int k = 0; k < 5; ++k) out[k] = {k - 2, Matrix4::Zero()};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[coherence_order(i, j) + 2].component(i, j) = m(i, j);
  return out;
}

}  // namespace qmpemba
