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

#include <string>
#include <vector>

#include "qmpemba/relaxation_model.hpp"
#include "qmpemba/spectral_analysis.hpp"
#include "qmpemba/types.hpp"

namespace qmpemba {

struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix4> states;
  std::vector<PopulationVector> populations;
  std::string meta;  // generator fingerprint
};

/// Pulse-sequence preparation: (theta)_y, free evolution for 1/(2 Delta)
/// under the interaction-frame offset Hamiltonian, then (theta)_{-x},
/// applied to the thermal state. theta must lie in the open interval
/// (0, pi/2). include_j_during_delay keeps the scalar coupling on during the
/// delay instead of neglecting it.
Matrix4 prepare_theta_state(double theta, const SystemParams& p,
                            bool include_j_during_delay = false);

/// Instantaneous gradient dephasing: removes all coherence components of
/// order +-1, +-2; with zero_zq_coherences also the |01><10| pair.
Matrix4 pfg_dephase(const Matrix4& rho, bool zero_zq_coherences = true);

/// 1/4 - epsilon (I1z + I2z) / 2
Matrix4 far_state(const SystemParams& p);

/// 1/4 + epsilon (I1z - I2z) / 2; maps to far_state under a pi pulse on spin 1.
Matrix4 near_state_genuine(const SystemParams& p);

std::vector<double> log_time_grid(double t_min, double t_max, int points);
std::vector<double> linear_time_grid(double t_min, double t_max, int points);

/// exp(L t) applied to the vectorized state at each time.
Trajectory propagate(const Superoperator& liouvillian, const Matrix4& rho0,
                     const std::vector<double>& times);

/// Population-sector propagation by spectral reconstruction,
/// p(t) = sum_n a_n exp(lambda_n t) v_n. Refused for near-degenerate
/// decompositions.
Trajectory propagate_by_modes(const ModeDecomposition& md, const PopulationVector& p0,
                              const std::vector<double>& times);

}  // namespace qmpemba
