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

#include "qmpemba/metrics.hpp"
#include "qmpemba/relaxation_model.hpp"

namespace qmpemba {

inline constexpr const char* kVersion = "0.1.0";

enum class Preset { fig3a, fig3c, fig3b_overlaps, fig3d_genuine, custom };
Preset preset_from_string(const std::string& s);
std::string to_string(Preset p);

enum class BUnit { hz, rad_per_s };
BUnit b_unit_from_string(const std::string& s);
std::string to_string(BUnit u);

Metric metric_from_string(const std::string& s);
Coupling coupling_from_string(const std::string& s);
std::string to_string(Coupling c);
SpectralMode spectral_mode_from_string(const std::string& s);
std::string to_string(SpectralMode m);
Channels channels_from_string(const std::string& comma_list);
std::string to_string(const Channels& c);

struct TimeGridSpec {
  double t_min = 1e-3;
  double t_max = 20.0;
  int points = 400;
  bool logarithmic = true;
};

struct ExperimentConfig {
  Preset preset = Preset::fig3a;
  double theta_deg = 45.0;
  Metric metric = Metric::trace_distance;
  // frequencies entered in Hz; converted to rad/s internally
  double omega0_hz = 500.02e6;
  double delta_hz = 89.0;
  double j_hz = 3.24;
  double epsilon = 1e-5;
  double tau_c = 2.1e-12;
  double b_value = 5903.0;
  BUnit b_unit = BUnit::hz;
  double csa_d_hz = 0.0;
  Coupling coupling = Coupling::ising;
  Channels channels{};
  SpectralMode spectral_mode = SpectralMode::linearized;
  TimeGridSpec grid{};
  bool dimensionless = true;  // K0 = 1, time in units of 1/K0
  bool rescale_by_epsilon = true;
  std::string output_path = "qmpemba_run";
};

ExperimentConfig preset_config(Preset p);

SystemParams system_params(const ExperimentConfig& cfg);
BathParams bath_params(const ExperimentConfig& cfg);
LiouvillianOptions liouvillian_options(const ExperimentConfig& cfg);

struct ExperimentResult {
  MpembaReport report;
  Eigen::VectorXcd eigenvalues;
  Eigen::VectorXcd overlaps_far;
  Eigen::VectorXcd overlaps_near;
  std::string csv_path;
  std::string report_path;
};

/// Runs one preset: builds the generator, propagates the competing states,
/// detects and classifies the crossing, writes the CSV plot data and a
/// plain-text report whose [config] section can be fed back as a config file.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct InvariantResult {
  std::string name;
  double value = 0.0;  // measured
  double bound = 0.0;  // allowed
  bool pass = false;
};

/// Test hooks for the invariant suite; the mismatched tensor pairing breaks
/// the coherence-order block structure while leaving the trace functional
/// intact, the anticommutator sign flip does the opposite.
enum class FaultInjection { none, mismatched_tensor_pair, anticommutator_sign };

std::vector<InvariantResult> run_invariant_suite(
    const ExperimentConfig& cfg = preset_config(Preset::fig3a),
    FaultInjection fault = FaultInjection::none);

}  // namespace qmpemba
