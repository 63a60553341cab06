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

#include "qmpemba/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qmpemba {

double trace_distance(const Matrix4& a, const Matrix4& b) {
  const Matrix4 diff = a - b;
  Eigen::SelfAdjointEigenSolver<Matrix4> es((diff + diff.adjoint()) / 2.0);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double relative_entropy(const Matrix4& a, const Matrix4& b) {
  Eigen::SelfAdjointEigenSolver<Matrix4> ea((a + a.adjoint()) / 2.0);
  Eigen::SelfAdjointEigenSolver<Matrix4> eb((b + b.adjoint()) / 2.0);
  const auto& av = ea.eigenvalues();
  const auto& bv = eb.eigenvalues();

  // |<a_i|b_j>|^2 weights
  Eigen::Matrix4d w;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      w(i, j) = std::norm(ea.eigenvectors().col(i).dot(eb.eigenvectors().col(j)));

  constexpr double kClip = 1e-300;
  bool clipped = false;
  double d = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double ai = av(i);
    if (ai <= kClip) continue;  // x log x -> 0
    d += ai * std::log(ai);
    for (int j = 0; j < 4; ++j) {
      if (w(i, j) < 1e-30) continue;
      double bj = bv(j);
      if (bj <= 1e-14) {
        if (ai * w(i, j) > 1e-12)
          throw std::domain_error("relative_entropy: second state singular on the support of the first");
        if (bj <= kClip) {
          bj = kClip;
          clipped = true;
        }
      }
      d -= ai * w(i, j) * std::log(bj);
    }
  }
  if (clipped)
    std::fprintf(stderr, "qmpemba: relative_entropy clipped near-zero eigenvalues\n");
  return d;
}

std::string to_string(MpembaClass c) {
  switch (c) {
    case MpembaClass::none: return "none";
    case MpembaClass::weak: return "weak";
    case MpembaClass::strong: return "strong";
    case MpembaClass::genuine: return "genuine";
  }
  return "?";
}

std::string to_string(Metric m) {
  return m == Metric::trace_distance ? "trace_distance" : "relative_entropy";
}

MonotoneCubicInterpolant::MonotoneCubicInterpolant(std::vector<double> x,
                                                   std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 2 || y_.size() != n)
    throw std::invalid_argument("interpolant needs matching grids of >= 2 points");
  std::vector<double> h(n - 1), s(n - 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    h[k] = x_[k + 1] - x_[k];
    if (h[k] <= 0.0) throw std::invalid_argument("interpolant grid must increase");
    s[k] = (y_[k + 1] - y_[k]) / h[k];
  }
  d_.assign(n, 0.0);
  auto edge = [](double h0, double h1, double m0, double m1) {
    double d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (d * m0 <= 0.0) return 0.0;
    if (m0 * m1 < 0.0 && std::abs(d) > 3.0 * std::abs(m0)) return 3.0 * m0;
    return d;
  };
  if (n == 2) {
    d_[0] = d_[1] = s[0];
  } else {
    d_[0] = edge(h[0], h[1], s[0], s[1]);
    d_[n - 1] = edge(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
    for (size_t k = 1; k + 1 < n; ++k) {
      if (s[k - 1] * s[k] <= 0.0) {
        d_[k] = 0.0;
      } else {
        const double w1 = 2.0 * h[k] + h[k - 1];
        const double w2 = h[k] + 2.0 * h[k - 1];
        d_[k] = (w1 + w2) / (w1 / s[k - 1] + w2 / s[k]);
      }
    }
  }
}

double MonotoneCubicInterpolant::operator()(double t) const {
  size_t k = 0;
  if (t >= x_.back()) {
    k = x_.size() - 2;
  } else {
    // rightmost interval with x_[k] <= t
    size_t lo = 0, hi = x_.size() - 1;
    while (hi - lo > 1) {
      const size_t mid = (lo + hi) / 2;
      (x_[mid] <= t ? lo : hi) = mid;
    }
    k = lo;
  }
  const double h = x_[k + 1] - x_[k];
  const double u = (t - x_[k]) / h;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1;
  const double h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2;
  const double h11 = u3 - u2;
  return h00 * y_[k] + h10 * h * d_[k] + h01 * y_[k + 1] + h11 * h * d_[k + 1];
}

MpembaReport detect_crossing(const Trajectory& far, const Trajectory& near,
                             Metric metric, const Matrix4& ref) {
  if (far.times != near.times)
    throw std::invalid_argument("detect_crossing: trajectories must share the time grid");
  const size_t n = far.times.size();
  if (n < 2) throw std::invalid_argument("detect_crossing: need at least 2 samples");

  MpembaReport rep;
  rep.metric = metric;
  rep.metric_far.resize(n);
  rep.metric_near.resize(n);
  auto eval = [&](const Matrix4& s) {
    return metric == Metric::trace_distance ? trace_distance(s, ref)
                                            : relative_entropy(s, ref);
  };
  for (size_t k = 0; k < n; ++k) {
    rep.metric_far[k] = eval(far.states[k]);
    rep.metric_near[k] = eval(near.states[k]);
  }
  rep.initial_gap = rep.metric_far[0] - rep.metric_near[0];

  MonotoneCubicInterpolant fi(far.times, rep.metric_far);
  MonotoneCubicInterpolant ni(far.times, rep.metric_near);
  auto diff = [&](double t) { return fi(t) - ni(t); };

  for (size_t k = 0; k + 1 < n; ++k) {
    const double ga = rep.metric_far[k] - rep.metric_near[k];
    const double gb = rep.metric_far[k + 1] - rep.metric_near[k + 1];
    if (ga == 0.0 && k == 0) continue;  // touching start is not a crossing
    if (ga * gb < 0.0) {
      double a = far.times[k], b = far.times[k + 1];
      double fa = diff(a);
      while (b - a > 1e-9 * std::max(b, 1e-300)) {
        const double mid = 0.5 * (a + b);
        const double fm = diff(mid);
        if (fa * fm <= 0.0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      rep.all_crossings.push_back(0.5 * (a + b));
    } else if (gb == 0.0 && ga != 0.0) {
      rep.all_crossings.push_back(far.times[k + 1]);
    }
  }

  if (!rep.all_crossings.empty() && rep.initial_gap > 0.0)
    rep.crossing_time = rep.all_crossings.front();
  return rep;
}

MpembaReport classify(const ModeDecomposition& md, const PopulationVector& p_far,
                      const PopulationVector& p_near, MpembaReport report) {
  const int slow = md.stationary_index == 0 ? 1 : 0;
  const Eigen::VectorXcd af = overlaps(md, p_far);
  const Eigen::VectorXcd an = overlaps(md, p_near);
  report.slow_overlap_far = af(slow);
  report.slow_overlap_near = an(slow);

  if (!report.crossing_time) {
    report.classification = MpembaClass::none;
    return report;
  }
  if (report.metric == Metric::relative_entropy) {
    report.classification = MpembaClass::genuine;
    return report;
  }
  const double thr_far = 1e-10 * p_far.norm();
  const double thr_near = 1e-10 * p_near.norm();
  const bool far_zero = std::abs(af(slow)) <= thr_far;
  const bool near_nonzero = std::abs(an(slow)) > thr_near;
  report.classification =
      far_zero && near_nonzero ? MpembaClass::strong : MpembaClass::weak;
  return report;
}

}  // namespace qmpemba
