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

#include <optional>
#include <string>
#include <vector>

#include "qmpemba/dynamics.hpp"
#include "qmpemba/spectral_analysis.hpp"
#include "qmpemba/types.hpp"

namespace qmpemba {

enum class Metric { trace_distance, relative_entropy };

/// D(a, b) = (1/2) tr |a - b|
double trace_distance(const Matrix4& a, const Matrix4& b);

/// d(a, b) = tr[a (log a - log b)] >= 0, via Hermitian eigendecomposition of
/// both states. Throws std::domain_error when b is singular on the support
/// of a; eigenvalues below 1e-300 are clipped before the log, with a warning
/// on stderr.
double relative_entropy(const Matrix4& a, const Matrix4& b);

enum class MpembaClass { none, weak, strong, genuine };
std::string to_string(MpembaClass c);
std::string to_string(Metric m);

struct MpembaReport {
  Metric metric = Metric::trace_distance;
  std::optional<double> crossing_time;  // first crossing, absent if none
  std::vector<double> all_crossings;
  double initial_gap = 0.0;  // metric(far) - metric(near) at the first grid time
  Complex slow_overlap_far{0, 0};   // a_1 of the far state
  Complex slow_overlap_near{0, 0};  // a_1 of the near state
  MpembaClass classification = MpembaClass::none;
  std::vector<double> metric_far;  // curves on the evaluated grid
  std::vector<double> metric_near;
};

/// Fritsch-Carlson monotone cubic (PCHIP) interpolant.
class MonotoneCubicInterpolant {
 public:
  MonotoneCubicInterpolant(std::vector<double> x, std::vector<double> y);
  double operator()(double t) const;

 private:
  std::vector<double> x_, y_, d_;
};

/// Evaluates metric(state(t), ref) along both trajectories, locates sign
/// changes of far - near by bisection on monotone cubic interpolants of the
/// two curves (to 1e-9 relative in time). crossing_time is set only when the
/// far state starts strictly above the near state. Grids must be identical.
MpembaReport detect_crossing(const Trajectory& far, const Trajectory& near,
                             Metric metric, const Matrix4& ref);

/// Fills the slow-mode overlaps and upgrades the classification:
/// weak / strong by the far state's overlap with the slowest decay mode,
/// genuine for a relative-entropy crossing.
MpembaReport classify(const ModeDecomposition& md, const PopulationVector& p_far,
                      const PopulationVector& p_near, MpembaReport report);

}  // namespace qmpemba
