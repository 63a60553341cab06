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

#include "qmpemba/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace qmpemba::closed_form {

double transition_rate(int m, double k0, double eps) {
  switch (m) {
    case 0: return k0 / 24.0;
    case 1: return k0 * (1.0 - eps) / 16.0;
    case -1: return k0 * (1.0 + eps) / 16.0;
    case 2: return k0 * (1.0 - 2.0 * eps) / 4.0;
    case -2: return k0 * (1.0 + 2.0 * eps) / 4.0;
    default: throw std::domain_error("transition_rate: |m| must be <= 2");
  }
}

Eigen::Matrix4d population_generator(double k0, double e) {
  Eigen::Matrix4d g;
  g << -(1 - e) / 8.0 - (1 - 2 * e) / 4.0, (1 + e) / 16.0, (1 + e) / 16.0, (1 + 2 * e) / 4.0,
      (1 - e) / 16.0, -1.0 / 24.0 - (1 + e) / 16.0 - (1 - e) / 16.0, 1.0 / 24.0, (1 + e) / 16.0,
      (1 - e) / 16.0, 1.0 / 24.0, -1.0 / 24.0 - (1 + e) / 16.0 - (1 - e) / 16.0, (1 + e) / 16.0,
      (1 - 2 * e) / 4.0, (1 - e) / 16.0, (1 - e) / 16.0, -(1 + 2 * e) / 4.0 - (1 + e) / 8.0;
  return k0 * g;
}

Matrix6 zqb_generator(double k0, double e, double delta) {
  const Complex id(0.0, delta);
  const double q16p = k0 * (1 + e) / 16.0;
  const double q16m = k0 * (1 - e) / 16.0;
  const double q32 = -k0 * (1 + e) / 32.0 - k0 * (1 - e) / 32.0;
  const double z = k0 / 24.0;
  Matrix6 g;
  // rows: d/dt (p00, p01, p10 | p11, c, c*)
  g << -k0 * (1 - e) / 8.0 - k0 * (1 - 2 * e) / 4.0, q16p, q16p, k0 * (1 + 2 * e) / 4.0, q16p, q16p,
      q16m, -z - q16p - q16m, z, q16p, q32, q32,
      q16m, z, -z - q16p - q16m, q16p, q32, q32,
      k0 * (1 - 2 * e) / 4.0, q16m, q16m, -k0 * (1 + 2 * e) / 4.0 - k0 * (1 + e) / 8.0, q16m, q16m,
      q16m, q32, q32, q16p, id - z - q16p - q16m, z,
      q16m, q32, q32, q16p, z, -id - z - q16p - q16m;
  return g;
}

Eigen::Matrix3cd x_system_generator(double k0, double delta) {
  const Complex id(0.0, delta);
  Eigen::Matrix3cd g;
  g << -k0 / 4.0, k0 / 4.0, 0.0,
      k0 / 8.0, -k0 / 8.0, id,
      0.0, id, -5.0 * k0 / 24.0;
  return g;
}

Eigen::Vector4d decay_rates(double k0) {
  return {0.0, -5.0 * k0 / 24.0, -k0 / 4.0, -5.0 * k0 / 8.0};
}

Eigen::Matrix4d right_modes(double e) {
  Eigen::Matrix4d v;
  const double n2 = std::sqrt(4.0 + (8.0 / 3.0) * e * (5.0 + 4.0 * e));
  const double n3 = std::sqrt((2.0 / 3.0) * (1.0 - e) * (3.0 - 5.0 * e));
  v.col(0) = Eigen::Vector4d(1 + 2 * e, 1, 1, 1 - 2 * e) / 4.0;
  v.col(1) = Eigen::Vector4d(0, -1, 1, 0) / std::sqrt(2.0);
  v.col(2) = Eigen::Vector4d(1 + 16 * e / 3.0, -1 - 8 * e / 3.0, -1 - 8 * e / 3.0, 1) / n2;
  v.col(3) = Eigen::Vector4d(-1 + 2 * e / 3.0, -e / 3.0, -e / 3.0, 1) / n3;
  return v;
}

Eigen::Matrix4d left_modes(double e) {
  Eigen::Matrix4d w;
  const double n2 = std::sqrt(4.0 + (8.0 / 3.0) * e * (5.0 + 4.0 * e));
  const double n3 = std::sqrt((2.0 / 3.0) * (1.0 - e) * (3.0 - 5.0 * e));
  w.row(0) = Eigen::RowVector4d(1, 1, 1, 1);
  w.row(1) = Eigen::RowVector4d(0, -1, 1, 0) / std::sqrt(2.0);
  w.row(2) = Eigen::RowVector4d(1 + 4 * e / 3.0, -1 - 2 * e / 3.0, -1 - 2 * e / 3.0, 1) / n2;
  w.row(3) = Eigen::RowVector4d(-1 + 14 * e / 3.0, -e / 3.0, -e / 3.0, 1) / n3;
  return w;
}

Eigen::Vector4d thermal_populations(double e) {
  return Eigen::Vector4d(1 + 2 * e, 1, 1, 1 - 2 * e) / 4.0;
}

Eigen::Vector4d far_populations(double e) {
  return Eigen::Vector4d::Constant(0.25) + (e / 2.0) * Eigen::Vector4d(-1, 0, 0, 1);
}

Eigen::Vector4d near_genuine_populations(double e) {
  return Eigen::Vector4d::Constant(0.25) + (e / 2.0) * Eigen::Vector4d(0, 1, -1, 0);
}

Eigen::Vector4d theta_populations(double theta, double e) {
  const double c = std::cos(2.0 * theta);
  return Eigen::Vector4d::Constant(0.25) +
         (e / 4.0) * Eigen::Vector4d(1 + c, 1 - c, -1 + c, -1 - c);
}

Eigen::Vector4d theta_initial_populations(double theta, double e) {
  const double c = std::cos(2.0 * theta);
  return Eigen::Vector4d::Constant(0.25) +
         (e / 2.0) * Eigen::Vector4d(1 + c, 1 - c, -1 + c, -1 - c);
}

Eigen::Vector4d population_solution(const Eigen::Vector4d& p0, double eps,
                                    double k0, double t) {
  // zeroth-order orthonormal modes; amplitudes are O(eps) so the result is
  // exact to O(eps^2)
  static const double r2 = std::sqrt(2.0);
  const Eigen::Vector4d u1(0, -1 / r2, 1 / r2, 0);
  const Eigen::Vector4d u2(0.5, -0.5, -0.5, 0.5);
  const Eigen::Vector4d u3(-1 / r2, 0, 0, 1 / r2);
  const Eigen::Vector4d pth = thermal_populations(eps);
  const Eigen::Vector4d d = p0 - pth;
  Eigen::Vector4d p = pth;
  p += (d.dot(u1)) * std::exp(-5.0 * k0 * t / 24.0) * u1;
  p += (d.dot(u2)) * std::exp(-k0 * t / 4.0) * u2;
  p += (d.dot(u3)) * std::exp(-5.0 * k0 * t / 8.0) * u3;
  return p;
}

double far_trace_distance(double eps, double k0, double t) {
  return std::abs(eps) * std::exp(-5.0 * k0 * t / 8.0);
}

double near_trace_distance(double theta, double eps, double k0, double t) {
  const double q = (1.0 - std::cos(2.0 * theta)) / 4.0;
  return std::abs(eps) * q *
         (std::exp(-5.0 * k0 * t / 8.0) + std::exp(-5.0 * k0 * t / 24.0));
}

double trace_distance_crossing_time(double theta, double k0) {
  const double q = (1.0 - std::cos(2.0 * theta)) / 4.0;
  if (!(q > 0.0 && q < 0.5))
    throw std::domain_error("crossing time defined for theta in (0, pi/2)");
  return (12.0 / (5.0 * k0)) * std::log((1.0 - q) / q);
}

}  // namespace qmpemba::closed_form
