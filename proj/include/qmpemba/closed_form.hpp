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

#include "qmpemba/types.hpp"

// Closed-form results for the dipolar relaxation model, valid to first order
// in epsilon under extreme narrowing. Everything here is hand-derived and
// kept independent of the generator-assembly code so it can serve as an
// oracle for it.

namespace qmpemba::closed_form {

/// eta_{+-}^{(1)} = K0 (1 -+ eps)/16, eta_{+-}^{(2)} = K0 (1 -+ 2 eps)/4,
/// eta^{(0)} = K0/24; m is the coherence-order change of the transition.
double transition_rate(int m, double k0, double eps);

/// The 4x4 population generator with linearized rates.
Eigen::Matrix4d population_generator(double k0, double eps);

/// The 6x6 generator on (p00, p01, p10, p11, c, c*).
Matrix6 zqb_generator(double k0, double eps, double delta);

/// At eps = 0 the combinations X1 = p00 + p11 - p01 - p10, X2 = c + c*,
/// X3 = c - c* close on themselves; returns their 3x3 generator.
Eigen::Matrix3cd x_system_generator(double k0, double delta);

/// {0, -5/24, -1/4, -5/8} * k0
Eigen::Vector4d decay_rates(double k0);

/// Right/left eigenvectors of the population generator to first order in
/// eps (columns / rows, biorthonormal as a pair).
Eigen::Matrix4d right_modes(double eps);
Eigen::Matrix4d left_modes(double eps);

Eigen::Vector4d thermal_populations(double eps);
Eigen::Vector4d far_populations(double eps);
Eigen::Vector4d near_genuine_populations(double eps);

/// Populations of the dephased theta state 1/4 + eps/4 (1 + c, 1 - c,
/// -1 + c, -1 - c), c = cos(2 theta).
Eigen::Vector4d theta_populations(double theta, double eps);

/// The twice-polarized variant 1/4 + eps/2 (1 + c, ...), the initial state
/// of the analytic relaxation solution.
Eigen::Vector4d theta_initial_populations(double theta, double eps);

/// Solution of dp/dt = L_p p to first order in eps: p_th plus the three
/// decay modes at rates -5K0/24, -K0/4, -5K0/8.
Eigen::Vector4d population_solution(const Eigen::Vector4d& p0, double eps,
                                    double k0, double t);

/// Trace distance of the relaxing far / theta states from the thermal state:
/// D_f(t) = |eps| e^{-5K0 t/8};
/// D_n(t) = |eps| (1 - cos 2theta)/4 (e^{-5K0 t/8} + e^{-5K0 t/24}).
double far_trace_distance(double eps, double k0, double t);
double near_trace_distance(double theta, double eps, double k0, double t);

/// Root of D_f = D_n: t* = (12 / 5K0) log((1-q)/q), q = (1 - cos 2theta)/4.
double trace_distance_crossing_time(double theta, double k0);

}  // namespace qmpemba::closed_form
