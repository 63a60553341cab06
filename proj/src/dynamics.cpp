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

#include "qmpemba/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "qmpemba/spin_algebra.hpp"

namespace qmpemba {

namespace {
const Complex kI(0.0, 1.0);

void check_times(const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("empty time grid");
  double prev = -1.0;
  for (double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("times must be finite and >= 0");
    if (t <= prev) throw std::invalid_argument("times must be strictly increasing");
    prev = t;
  }
}
}  // namespace

Matrix4 prepare_theta_state(double theta, const SystemParams& p,
                            bool include_j_during_delay) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2.0))
    throw std::domain_error("theta must lie in (0, pi/2)");
  if (p.delta_offset == 0.0)
    throw std::invalid_argument("preparation delay 1/(2 Delta) needs delta_offset != 0");

  Matrix4 rho = thermal_state(p);

  const Matrix4 u1 = rotation_pulse(theta, PulseAxis::y, PulseTarget::both);
  rho = u1 * rho * u1.adjoint();

  // free evolution for 1/(2 Delta) (Delta in cycles), i.e. pi/Delta here
  const Matrix4 i1z = spin_operator(1, Axis::z);
  const Matrix4 i2z = spin_operator(2, Axis::z);
  Matrix4 h = (-p.delta_offset / 2.0) * i1z + (p.delta_offset / 2.0) * i2z;
  if (include_j_during_delay)
    h += 2.0 * std::numbers::pi * p.j_coupling * i1z * i2z;
  const double delay = std::numbers::pi / p.delta_offset;
  const Matrix4 ud = Matrix4(-kI * delay * h).exp();
  rho = ud * rho * ud.adjoint();

  const Matrix4 u2 = rotation_pulse(theta, PulseAxis::minus_x, PulseTarget::both);
  return u2 * rho * u2.adjoint();
}

Matrix4 pfg_dephase(const Matrix4& rho, bool zero_zq_coherences) {
  Matrix4 out = coherence_decompose(rho)[2].component;  // order-0 block
  if (zero_zq_coherences) {
    out(1, 2) = 0.0;
    out(2, 1) = 0.0;
  }
  return out;
}

Matrix4 far_state(const SystemParams& p) {
  const Matrix4 iz = spin_operator(1, Axis::z) + spin_operator(2, Axis::z);
  return Matrix4::Identity() / 4.0 - p.epsilon * iz / 2.0;
}

Matrix4 near_state_genuine(const SystemParams& p) {
  const Matrix4 dz = spin_operator(1, Axis::z) - spin_operator(2, Axis::z);
  return Matrix4::Identity() / 4.0 + p.epsilon * dz / 2.0;
}

std::vector<double> log_time_grid(double t_min, double t_max, int points) {
  if (points < 2 || t_min <= 0.0 || t_max <= t_min)
    throw std::invalid_argument("log_time_grid: need 0 < t_min < t_max, points >= 2");
  std::vector<double> t(points);
  const double r = std::log(t_max / t_min) / (points - 1);
  for (int k = 0; k < points; ++k) t[k] = t_min * std::exp(k * r);
  t.back() = t_max;
  return t;
}

std::vector<double> linear_time_grid(double t_min, double t_max, int points) {
  if (points < 2 || t_min < 0.0 || t_max <= t_min)
    throw std::invalid_argument("linear_time_grid: need 0 <= t_min < t_max, points >= 2");
  std::vector<double> t(points);
  const double h = (t_max - t_min) / (points - 1);
  for (int k = 0; k < points; ++k) t[k] = t_min + k * h;
  t.back() = t_max;
  return t;
}

Trajectory propagate(const Superoperator& liouvillian, const Matrix4& rho0,
                     const std::vector<double>& times) {
  if (liouvillian.rows() != 16 || liouvillian.cols() != 16)
    throw std::invalid_argument("propagate: 16x16 generator expected");
  check_times(times);
  require_density_matrix(rho0);

  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());
  traj.populations.reserve(times.size());
  const Eigen::VectorXcd v0 = vectorize(rho0);
  for (double t : times) {
    Eigen::MatrixXcd prop = (liouvillian * t).exp();
    Eigen::VectorXcd v = prop * v0;
    if (!v.allFinite()) throw std::runtime_error("propagate: non-finite state");
    Matrix4 rho = unvectorize(v);
    traj.states.push_back(rho);
    traj.populations.push_back(populations_of(rho));
  }
  std::ostringstream meta;
  meta << "dim=16 norm=" << liouvillian.norm();
  traj.meta = meta.str();
  return traj;
}

Trajectory propagate_by_modes(const ModeDecomposition& md, const PopulationVector& p0,
                              const std::vector<double>& times) {
  if (md.near_degenerate)
    throw std::runtime_error(
        "propagate_by_modes: near-degenerate decomposition, use the matrix exponential");
  if (md.eigenvalues.size() != 4)
    throw std::invalid_argument("propagate_by_modes: population-sector decomposition expected");
  check_times(times);

  const Eigen::VectorXcd a = overlaps(md, p0);
  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());
  traj.populations.reserve(times.size());
  for (double t : times) {
    Eigen::VectorXcd p = Eigen::VectorXcd::Zero(4);
    for (int n = 0; n < 4; ++n)
      p += a(n) * std::exp(md.eigenvalues(n) * t) * md.right_vectors.col(n);
    if (!p.allFinite()) throw std::runtime_error("propagate_by_modes: non-finite state");
    PopulationVector pr = p.real();
    traj.populations.push_back(pr);
    traj.states.push_back(pr.cast<Complex>().asDiagonal());
  }
  traj.meta = "dim=4 spectral";
  return traj;
}

}  // namespace qmpemba
