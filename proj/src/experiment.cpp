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

#include "qmpemba/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qmpemba/closed_form.hpp"
#include "qmpemba/dynamics.hpp"
#include "qmpemba/spin_algebra.hpp"

namespace qmpemba {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Preset preset_from_string(const std::string& s) {
  if (s == "fig3a") return Preset::fig3a;
  if (s == "fig3c") return Preset::fig3c;
  if (s == "fig3b_overlaps") return Preset::fig3b_overlaps;
  if (s == "fig3d_genuine") return Preset::fig3d_genuine;
  if (s == "custom") return Preset::custom;
  throw std::invalid_argument("unknown preset: " + s);
}

std::string to_string(Preset p) {
  switch (p) {
    case Preset::fig3a: return "fig3a";
    case Preset::fig3c: return "fig3c";
    case Preset::fig3b_overlaps: return "fig3b_overlaps";
    case Preset::fig3d_genuine: return "fig3d_genuine";
    case Preset::custom: return "custom";
  }
  return "?";
}

BUnit b_unit_from_string(const std::string& s) {
  if (s == "hz") return BUnit::hz;
  if (s == "rad") return BUnit::rad_per_s;
  throw std::invalid_argument("b-unit must be 'hz' or 'rad'");
}

std::string to_string(BUnit u) { return u == BUnit::hz ? "hz" : "rad"; }

Metric metric_from_string(const std::string& s) {
  if (s == "trace_distance") return Metric::trace_distance;
  if (s == "relative_entropy") return Metric::relative_entropy;
  throw std::invalid_argument("metric must be trace_distance or relative_entropy");
}

Coupling coupling_from_string(const std::string& s) {
  if (s == "ising") return Coupling::ising;
  if (s == "full_scalar") return Coupling::full_scalar;
  throw std::invalid_argument("coupling must be ising or full_scalar");
}

std::string to_string(Coupling c) {
  return c == Coupling::ising ? "ising" : "full_scalar";
}

SpectralMode spectral_mode_from_string(const std::string& s) {
  if (s == "linearized") return SpectralMode::linearized;
  if (s == "exact") return SpectralMode::exact_lorentzian;
  throw std::invalid_argument("spectral-mode must be linearized or exact");
}

std::string to_string(SpectralMode m) {
  return m == SpectralMode::linearized ? "linearized" : "exact";
}

Channels channels_from_string(const std::string& comma_list) {
  Channels ch{false, false, false};
  std::stringstream ss(comma_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "dipolar") ch.dipolar = true;
    else if (item == "csa") ch.csa = true;
    else if (item == "cross") ch.cross = true;
    else if (!item.empty()) throw std::invalid_argument("unknown channel: " + item);
  }
  return ch;
}

std::string to_string(const Channels& c) {
  std::string s;
  if (c.dipolar) s += "dipolar";
  if (c.csa) s += s.empty() ? "csa" : ",csa";
  if (c.cross) s += s.empty() ? "cross" : ",cross";
  return s;
}

ExperimentConfig preset_config(Preset p) {
  ExperimentConfig cfg;
  cfg.preset = p;
  switch (p) {
    case Preset::fig3a:
      cfg.theta_deg = 45.0;
      cfg.metric = Metric::trace_distance;
      break;
    case Preset::fig3c:
    case Preset::fig3b_overlaps:
      cfg.theta_deg = 70.0;
      cfg.metric = Metric::trace_distance;
      break;
    case Preset::fig3d_genuine:
      cfg.theta_deg = 70.0;
      cfg.metric = Metric::relative_entropy;
      break;
    case Preset::custom:
      break;
  }
  return cfg;
}

SystemParams system_params(const ExperimentConfig& cfg) {
  SystemParams p;
  p.omega0 = kTwoPi * cfg.omega0_hz;
  p.delta_offset = kTwoPi * cfg.delta_hz;
  p.j_coupling = cfg.j_hz;
  p.epsilon = cfg.epsilon;
  return p;
}

BathParams bath_params(const ExperimentConfig& cfg) {
  BathParams bp;
  bp.b_dipolar = cfg.b_unit == BUnit::hz ? kTwoPi * cfg.b_value : cfg.b_value;
  bp.tau_c = cfg.tau_c;
  bp.csa_d = kTwoPi * cfg.csa_d_hz;
  bp.include_cross_correlation = cfg.channels.cross;
  return bp;
}

LiouvillianOptions liouvillian_options(const ExperimentConfig& cfg) {
  LiouvillianOptions opts;
  opts.coupling = cfg.coupling;
  opts.spectral_mode = cfg.spectral_mode;
  opts.channels = cfg.channels;
  if (cfg.dimensionless) opts.k0_override = 1.0;
  return opts;
}

namespace {

void write_config_section(std::ostream& os, const ExperimentConfig& cfg) {
  os << "[config]\n";
  os << "preset = " << to_string(cfg.preset) << "\n";
  os << "theta = " << fmt(cfg.theta_deg) << "\n";
  os << "metric = " << to_string(cfg.metric) << "\n";
  os << "omega0 = " << fmt(cfg.omega0_hz) << "\n";
  os << "delta = " << fmt(cfg.delta_hz) << "\n";
  os << "j = " << fmt(cfg.j_hz) << "\n";
  os << "epsilon = " << fmt(cfg.epsilon) << "\n";
  os << "tau-c = " << fmt(cfg.tau_c) << "\n";
  os << "b = " << fmt(cfg.b_value) << "\n";
  os << "b-unit = " << to_string(cfg.b_unit) << "\n";
  os << "csa-d = " << fmt(cfg.csa_d_hz) << "\n";
  os << "coupling = " << to_string(cfg.coupling) << "\n";
  os << "channels = " << to_string(cfg.channels) << "\n";
  os << "spectral-mode = " << to_string(cfg.spectral_mode) << "\n";
  os << "t-min = " << fmt(cfg.grid.t_min) << "\n";
  os << "t-max = " << fmt(cfg.grid.t_max) << "\n";
  os << "points = " << cfg.grid.points << "\n";
  os << "spacing = " << (cfg.grid.logarithmic ? "log" : "linear") << "\n";
  os << "dimensionless = " << (cfg.dimensionless ? "true" : "false") << "\n";
  os << "rescale-by-epsilon = " << (cfg.rescale_by_epsilon ? "true" : "false") << "\n";
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const SystemParams p = system_params(cfg);
  const BathParams bp = bath_params(cfg);
  const LiouvillianOptions opts = liouvillian_options(cfg);
  const double k0 = cfg.dimensionless ? 1.0 : k0_rate(bp);
  if (k0 <= 0.0) throw std::invalid_argument("vanishing relaxation rate");

  const Superoperator liou = build_liouvillian(p, bp, opts);
  const Superoperator lp = population_generator(liou);
  const ModeDecomposition md = eigendecompose(lp);

  // grid in units of K0 t, prepended with t = 0 for the initial gap
  std::vector<double> grid = cfg.grid.logarithmic
                                 ? log_time_grid(cfg.grid.t_min, cfg.grid.t_max, cfg.grid.points)
                                 : linear_time_grid(std::max(cfg.grid.t_min, 1e-12),
                                                    cfg.grid.t_max, cfg.grid.points);
  std::vector<double> times;
  times.reserve(grid.size() + 1);
  times.push_back(0.0);
  for (double t : grid) times.push_back(t / k0);

  const Matrix4 rho_far = far_state(p);
  const Matrix4 rho_near =
      cfg.preset == Preset::fig3d_genuine
          ? near_state_genuine(p)
          : pfg_dephase(prepare_theta_state(cfg.theta_deg * std::numbers::pi / 180.0, p));
  const Matrix4 rho_ref = thermal_state(p);

  const Trajectory traj_far = propagate(liou, rho_far, times);
  const Trajectory traj_near = propagate(liou, rho_near, times);

  MpembaReport rep = detect_crossing(traj_far, traj_near, cfg.metric, rho_ref);
  rep = classify(md, populations_of(rho_far), populations_of(rho_near), rep);

  ExperimentResult res;
  res.report = rep;
  res.eigenvalues = md.eigenvalues;
  res.overlaps_far = overlaps(md, populations_of(rho_far));
  res.overlaps_near = overlaps(md, populations_of(rho_near));

  const std::filesystem::path out(cfg.output_path);
  if (out.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(out.parent_path(), ec);
  }
  res.csv_path = cfg.output_path + ".csv";
  res.report_path = cfg.output_path + "_report.txt";

  double mscale = 1.0;
  if (cfg.rescale_by_epsilon) {
    const double e2 = 2.0 * std::abs(cfg.epsilon);
    mscale = cfg.metric == Metric::trace_distance ? 1.0 / e2 : 1.0 / (e2 * e2);
  }

  {
    std::ofstream csv(res.csv_path, std::ios::trunc);
    if (!csv) throw std::invalid_argument("cannot write " + res.csv_path);
    const char* mname = cfg.metric == Metric::trace_distance ? "D" : "d";
    csv << "time," << mname << "_far," << mname << "_near,"
        << "p00_far,p01_far,p10_far,p11_far,"
        << "p00_near,p01_near,p10_near,p11_near\n";
    for (size_t k = 0; k < times.size(); ++k) {
      csv << fmt(times[k] * k0) << ',' << fmt(rep.metric_far[k] * mscale) << ','
          << fmt(rep.metric_near[k] * mscale);
      for (int i = 0; i < 4; ++i) csv << ',' << fmt(traj_far.populations[k](i));
      for (int i = 0; i < 4; ++i) csv << ',' << fmt(traj_near.populations[k](i));
      csv << '\n';
    }
  }

  {
    std::ofstream rf(res.report_path, std::ios::trunc);
    if (!rf) throw std::invalid_argument("cannot write " + res.report_path);
    rf << "# qmpemba report\n";
    rf << "version = " << kVersion << "\n\n";
    write_config_section(rf, cfg);
    rf << "\n[diagnostics]\n";
    rf << "k0 = " << fmt(k0) << (cfg.dimensionless ? "  # dimensionless run" : "  # rad/s") << "\n";
    rf << "time_unit = " << (cfg.dimensionless ? "1/K0" : "s") << "\n";
    rf << "narrowing_product = " << fmt(narrowing_product(p, bp)) << "\n";
    rf << "b_rad_per_s = " << fmt(bp.b_dipolar) << "\n";
    rf << "\n[spectrum]\n";
    for (int n = 0; n < res.eigenvalues.size(); ++n)
      rf << "lambda_" << n << " = " << fmt(res.eigenvalues(n).real()) << " "
         << fmt(res.eigenvalues(n).imag()) << "\n";
    rf << "\n[overlaps]\n";
    for (int n = 0; n < res.overlaps_far.size(); ++n)
      rf << "a" << n << "_far = " << fmt(res.overlaps_far(n).real()) << "\n";
    for (int n = 0; n < res.overlaps_near.size(); ++n)
      rf << "a" << n << "_near = " << fmt(res.overlaps_near(n).real()) << "\n";
    rf << "\n[result]\n";
    rf << "metric = " << to_string(cfg.metric) << "\n";
    rf << "initial_gap = " << fmt(rep.initial_gap * mscale) << "\n";
    rf << "crossing_time = " << (rep.crossing_time ? fmt(*rep.crossing_time * k0) : "none") << "\n";
    rf << "crossings_found = " << rep.all_crossings.size() << "\n";
    rf << "classification = " << to_string(rep.classification) << "\n";
  }
  return res;
}

// ---------------------------------------------------------------------------
// invariant suite

namespace {

using Rng = std::mt19937_64;

Matrix4 random_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

Matrix4 random_hermitian(Rng& rng) {
  const Matrix4 g = random_complex(rng);
  return (g + g.adjoint()) / 2.0;
}

Matrix4 random_density(Rng& rng) {
  const Matrix4 g = random_complex(rng);
  Matrix4 rho = g * g.adjoint();
  return rho / rho.trace().real();
}

PopulationVector random_compliant_populations(Rng& rng) {
  // p00 + p11 = 1/2 = p01 + p10, entries nonnegative
  std::uniform_real_distribution<double> u(0.0, 0.5);
  const double a = u(rng), b = u(rng);
  return {a, b, 0.5 - b, 0.5 - a};
}

Superoperator anticommutator_super(const Matrix4& m) {
  const Matrix4 id = Matrix4::Identity();
  Superoperator s = Eigen::kroneckerProduct(id, m);
  s += Eigen::kroneckerProduct(m.transpose(), id);
  return s;
}

Superoperator build_with_fault(const SystemParams& p, const BathParams& bp,
                               const LiouvillianOptions& opts, FaultInjection fault) {
  if (fault == FaultInjection::none) return build_liouvillian(p, bp, opts);
  const double k0 = opts.k0_override ? *opts.k0_override : k0_rate(bp);
  Superoperator l =
      hamiltonian_commutator(hamiltonian(p, Frame::interaction, opts.coupling));
  for (int m = -2; m <= 2; ++m) {
    const double rate = k0 * (1.0 + m * p.epsilon);
    const Matrix4 t = spherical_tensor(m);
    if (fault == FaultInjection::mismatched_tensor_pair && m == 0) {
      l += rate * dissipator(t, spherical_tensor(1).adjoint());
    } else if (fault == FaultInjection::anticommutator_sign) {
      l += rate * (dissipator(t, t.adjoint()) + anticommutator_super(t.adjoint() * t));
    } else {
      l += rate * dissipator(t, t.adjoint());
    }
  }
  return l;
}

double offblock_norm(const Superoperator& l) {
  double worst = 0.0;
  for (int ri = 0; ri < 4; ++ri)
    for (int rj = 0; rj < 4; ++rj)
      for (int ci = 0; ci < 4; ++ci)
        for (int cj = 0; cj < 4; ++cj)
          if (coherence_order(ri, rj) != coherence_order(ci, cj))
            worst = std::max(worst,
                             std::abs(l(vec_index(ri, rj), vec_index(ci, cj))));
  return worst;
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(const ExperimentConfig& cfg,
                                                 FaultInjection fault) {
  std::vector<InvariantResult> out;
  auto push = [&](const std::string& name, double value, double bound) {
    out.push_back({name, value, bound, value <= bound});
  };

  const SystemParams p = system_params(cfg);
  BathParams bp = bath_params(cfg);
  const LiouvillianOptions opts = liouvillian_options(cfg);
  const double k0 = cfg.dimensionless ? 1.0 : k0_rate(bp);
  const double eps = p.epsilon;
  Rng rng(0x5eed5eedULL);

  const Superoperator liou = build_with_fault(p, bp, opts, fault);

  // channel combinations for the structural checks
  std::vector<Superoperator> gens = {liou};
  if (fault == FaultInjection::none) {
    BathParams bpc = bp;
    if (bpc.csa_d == 0.0) bpc.csa_d = 0.3 * bpc.b_dipolar;
    LiouvillianOptions o2 = opts;
    o2.channels = {true, true, false};
    gens.push_back(build_liouvillian(p, bpc, o2));
    o2.channels = {true, true, true};
    gens.push_back(build_liouvillian(p, bpc, o2));
    LiouvillianOptions o3 = opts;
    o3.coupling = Coupling::full_scalar;
    gens.push_back(build_liouvillian(p, bp, o3));
  }

  double worst_trace = 0.0, worst_herm = 0.0, worst_block = 0.0;
  for (const auto& g : gens) {
    worst_block = std::max(worst_block, offblock_norm(g));
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix4 rho = random_hermitian(rng);
      const Matrix4 drho = unvectorize(g * vectorize(rho));
      worst_trace = std::max(worst_trace, std::abs(drho.trace()));
      const Matrix4 rho2 = random_complex(rng);
      const Matrix4 lhs = unvectorize(g * vectorize(Matrix4(rho2.adjoint())));
      const Matrix4 rhs = unvectorize(g * vectorize(rho2)).adjoint();
      worst_herm = std::max(worst_herm, max_abs(lhs - rhs));
    }
  }
  push("trace_preservation", worst_trace, 1e-12);
  push("hermiticity_preservation", worst_herm, 1e-12);
  push("coherence_block_structure", worst_block, 1e-12);

  const Superoperator lp = population_generator(liou);
  push("population_generator_match",
       max_abs(lp - closed_form::population_generator(k0, eps).cast<Complex>()),
       std::max(1e-12, 10.0 * eps * eps * k0));

  if (fault != FaultInjection::none) return out;

  double min_rate = std::numeric_limits<double>::infinity();
  for (int m = -2; m <= 2; ++m)
    min_rate = std::min(min_rate, k0 * (1.0 + m * eps));
  push("rates_positive", -min_rate, 0.0);  // pass iff all rates > 0

  push("zqb_generator_match",
       max_abs(zero_quantum_block(liou) -
               Superoperator(closed_form::zqb_generator(k0, eps, p.delta_offset))),
       std::max(1e-12, 10.0 * eps * eps * k0));

  const ModeDecomposition md = eigendecompose(lp);
  {
    Eigen::Vector4d target = closed_form::decay_rates(k0);
    double worst = 0.0;
    for (int n = 0; n < 4; ++n)
      worst = std::max(worst, std::abs(md.eigenvalues(n) - Complex(target(n), 0.0)));
    push("eigenvalue_match", worst, 1e-6 * k0);
  }
  push("biorthonormality",
       max_abs(md.left_vectors * md.right_vectors - Eigen::MatrixXcd::Identity(4, 4)),
       1e-10);
  {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::Vector4d x = Eigen::Vector4d::NullaryExpr(
          [&rng]() { return std::normal_distribution<double>(0, 1)(rng); });
      Eigen::VectorXcd rec = Eigen::VectorXcd::Zero(4);
      const Eigen::VectorXcd a = overlaps(md, x);
      for (int n = 0; n < 4; ++n) rec += a(n) * md.right_vectors.col(n);
      worst = std::max(worst, (rec - x.cast<Complex>()).cwiseAbs().maxCoeff());
    }
    push("mode_reconstruction", worst, 1e-10);
  }
  {
    double worst = 0.0;
    const double scale = lp.norm();
    for (int n = 0; n < 4; ++n) {
      worst = std::max(worst, (lp * md.right_vectors.col(n) -
                               md.eigenvalues(n) * md.right_vectors.col(n))
                                  .norm());
      worst = std::max(worst, (md.left_vectors.row(n) * lp -
                               md.eigenvalues(n) * md.left_vectors.row(n))
                                  .norm());
    }
    push("eigen_residuals", worst, 1e-10 * scale);
  }

  // thermal fixed point of the full generator
  {
    const ModeDecomposition full = eigendecompose(liou);
    Eigen::VectorXcd ss = full.right_vectors.col(full.stationary_index);
    Matrix4 rho_ss = unvectorize(ss);
    rho_ss /= rho_ss.trace();
    push("stationary_state_thermal", trace_distance(rho_ss, thermal_state(p)),
         10.0 * eps * eps);
  }

  // transition rates against the closed forms, entrywise
  {
    const auto g = lp.real();
    double worst = 0.0;
    auto check = [&](int r, int c, int m) {
      worst = std::max(worst, std::abs(g(r, c) - closed_form::transition_rate(m, k0, eps)));
    };
    check(1, 0, 1);   // 00 -> 01
    check(2, 0, 1);   // 00 -> 10
    check(3, 0, 2);   // 00 -> 11
    check(0, 1, -1);  // 01 -> 00
    check(0, 2, -1);
    check(0, 3, -2);  // 11 -> 00
    check(3, 1, 1);
    check(3, 2, 1);
    check(1, 3, -1);
    check(2, 3, -1);
    check(1, 2, 0);
    check(2, 1, 0);
    push("detailed_balance_rates", worst, 1e-12 * std::max(1.0, k0));
  }

  const Eigen::Vector4d p_far = populations_of(far_state(p));
  const Eigen::Vector4d p_th = closed_form::thermal_populations(eps);
  {
    const Eigen::VectorXcd a = overlaps(md, p_far);
    push("strong_overlap_far", std::abs(a(1)), 1e-12);

    // single-mode decay certificate
    const Complex a3 = a(3);
    const double v3n = md.right_vectors.col(3).norm();
    double worst = 0.0;
    for (double t : linear_time_grid(0.0, 20.0 / k0, 101)) {
      Eigen::Matrix4d prop = (lp.real() * t).exp();
      const Eigen::Vector4d pt = prop * p_far;
      worst = std::max(worst, std::abs((pt - p_th).norm() -
                                       std::abs(a3) * std::exp(md.eigenvalues(3).real() * t) * v3n));
    }
    push("single_exponential_far", worst, 1e-10);
  }

  // coherence containment in the zero-quantum block
  {
    const Superoperator zq = zero_quantum_block(liou);
    SystemParams p0 = p;
    p0.epsilon = 0.0;
    const Superoperator zq0 = zero_quantum_block(build_liouvillian(p0, bp, opts));
    double worst_eps = 0.0, worst_zero = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const PopulationVector pop = random_compliant_populations(rng);
      Eigen::VectorXcd x0 = Eigen::VectorXcd::Zero(6);
      for (int i = 0; i < 4; ++i) x0(i) = pop(i);
      for (double t : log_time_grid(1e-3 / k0, 20.0 / k0, 60)) {
        const Eigen::VectorXcd xe = (zq * t).exp() * x0;
        const Eigen::VectorXcd x0e = (zq0 * t).exp() * x0;
        worst_eps = std::max(worst_eps, std::abs(xe(4)));
        worst_zero = std::max(worst_zero, std::abs(x0e(4)));
      }
    }
    push("coherence_suppression", worst_eps, 10.0 * (k0 / p.delta_offset) * std::abs(eps));
    push("coherence_closure_eps0", worst_zero, 1e-12);
  }

  // semigroup property of the full propagator
  {
    std::uniform_real_distribution<double> u(0.0, 10.0 / k0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const double t1 = u(rng), t2 = u(rng);
      const Matrix4 rho0 = thermal_state(p) + 0.0 * Matrix4::Identity();
      const Matrix4 rho1 = random_density(rng);
      const Eigen::VectorXcd v = vectorize(rho1);
      const Eigen::VectorXcd one = (liou * (t1 + t2)).exp() * v;
      const Eigen::VectorXcd two = (liou * t2).exp() * ((liou * t1).exp() * v);
      worst = std::max(worst, (one - two).cwiseAbs().maxCoeff());
      (void)rho0;
    }
    push("semigroup", worst, 1e-10);
  }

  // spectral reconstruction equals the matrix exponential on populations
  {
    double worst = 0.0;
    const auto times = log_time_grid(1e-3 / k0, 20.0 / k0, 40);
    for (int trial = 0; trial < 100; ++trial) {
      const PopulationVector pop = random_compliant_populations(rng);
      const Trajectory bym = propagate_by_modes(md, pop, times);
      for (size_t k = 0; k < times.size(); ++k) {
        Eigen::Matrix4d prop = (lp.real() * times[k]).exp();
        const Eigen::Vector4d pe = prop * pop;
        worst = std::max(worst, (bym.populations[k] - pe).cwiseAbs().maxCoeff());
      }
    }
    push("mode_vs_exponential", worst, 1e-9);
  }

  // positivity along trajectories
  {
    double worst = -1.0;  // most negative eigenvalue seen, sign flipped
    const auto times = log_time_grid(1e-3 / k0, 20.0 / k0, 50);
    std::vector<Matrix4> inits = {far_state(p), near_state_genuine(p), thermal_state(p),
                                  pfg_dephase(prepare_theta_state(std::numbers::pi / 4.0, p))};
    for (const auto& rho0 : inits) {
      const Trajectory traj = propagate(liou, rho0, times);
      for (const auto& s : traj.states) {
        Eigen::SelfAdjointEigenSolver<Matrix4> es((s + s.adjoint()) / 2.0);
        worst = std::max(worst, -es.eigenvalues().minCoeff());
      }
    }
    push("positivity", worst, 1e-12);
  }

  // closed-form relaxation curves against the matrix exponential
  {
    double worst = 0.0;
    const auto times = linear_time_grid(0.0, 20.0 / k0, 50);
    for (double deg : {10.0, 30.0, 45.0, 70.0, 80.0}) {
      const double th = deg * std::numbers::pi / 180.0;
      const Eigen::Vector4d p0 = closed_form::theta_initial_populations(th, eps);
      for (double t : times) {
        Eigen::Matrix4d prop = (lp.real() * t).exp();
        const Eigen::Vector4d pe = prop * p0;
        const Eigen::Vector4d pa = closed_form::population_solution(p0, eps, k0, t);
        worst = std::max(worst, (pe - pa).cwiseAbs().maxCoeff());
      }
    }
    push("analytic_solution_match", worst, std::max(1e-10, 10.0 * eps * eps));
  }

  // gradient dephasing is a projection
  {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix4 rho = random_density(rng);
      const Matrix4 once = pfg_dephase(rho);
      worst = std::max(worst, max_abs(pfg_dephase(once) - once));
    }
    push("pfg_idempotent", worst, 0.0);
  }

  // metric properties
  {
    double sym = 0.0, tri = 0.0, uni = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix4 a = random_density(rng), b = random_density(rng), c = random_density(rng);
      sym = std::max(sym, std::abs(trace_distance(a, b) - trace_distance(b, a)));
      tri = std::max(tri, trace_distance(a, c) - trace_distance(a, b) - trace_distance(b, c));
      const Matrix4 u = rotation_pulse(0.3 + 0.01 * trial, PulseAxis::y, PulseTarget::both);
      uni = std::max(uni, std::abs(trace_distance(u * a * u.adjoint(), u * b * u.adjoint()) -
                                   trace_distance(a, b)));
    }
    push("metric_symmetry", sym, 1e-12);
    push("metric_triangle", tri, 1e-12);
    push("metric_unitary_invariance", uni, 1e-12);
  }

  // monotone approach to equilibrium
  {
    const auto times = log_time_grid(1e-3 / k0, 20.0 / k0, 120);
    const Matrix4 ref = thermal_state(p);
    double worst_d = 0.0, worst_s = 0.0;
    for (const Matrix4& rho0 : {far_state(p),
                                pfg_dephase(prepare_theta_state(70.0 * std::numbers::pi / 180.0, p)),
                                near_state_genuine(p)}) {
      const Trajectory traj = propagate(liou, rho0, times);
      double prev_d = trace_distance(rho0, ref);
      double prev_s = relative_entropy(rho0, ref);
      for (const auto& s : traj.states) {
        const double d = trace_distance(s, ref);
        const double r = relative_entropy(s, ref);
        worst_d = std::max(worst_d, d - prev_d);
        worst_s = std::max(worst_s, r - prev_s);
        prev_d = d;
        prev_s = r;
      }
    }
    push("trace_distance_monotone", worst_d, 1e-10);
    push("relative_entropy_monotone", worst_s, 1e-10);
  }

  // two-qubit pair reduction
  {
    const Eigen::Matrix2d g2 = two_level_pair_generator(lp);
    double worst_pair = 0.0, worst_mid = 0.0;
    const auto times = log_time_grid(1e-3 / k0, 20.0 / k0, 80);
    for (const Eigen::Vector4d& p0 :
         {p_far, Eigen::Vector4d(0.25 + eps, 0.25, 0.25, 0.25 - eps)}) {
      for (double t : times) {
        Eigen::Matrix4d prop = (lp.real() * t).exp();
        const Eigen::Vector4d pt = prop * p0;
        const Eigen::Vector2d pair =
            (g2 * t).exp() * Eigen::Vector2d(p0(0), p0(3));
        worst_pair = std::max({worst_pair, std::abs(pt(0) - pair(0)), std::abs(pt(3) - pair(1))});
        worst_mid = std::max({worst_mid, std::abs(pt(1) - 0.25), std::abs(pt(2) - 0.25)});
      }
    }
    push("pair_autonomy", worst_pair, 1e-10);
    push("pair_middle_levels_constant", worst_mid, 1e-10);
  }

  // crossing detector against the closed-form root
  {
    const auto times = log_time_grid(1e-3 / k0, 20.0 / k0, 2000);
    const double th = 45.0 * std::numbers::pi / 180.0;
    Trajectory tf, tn;
    tf.times = tn.times = times;
    for (double t : times) {
      const Eigen::Vector4d a = closed_form::population_solution(p_far, eps, k0, t);
      const Eigen::Vector4d b = closed_form::population_solution(
          closed_form::theta_populations(th, eps), eps, k0, t);
      tf.states.push_back(a.cast<Complex>().asDiagonal());
      tn.states.push_back(b.cast<Complex>().asDiagonal());
      tf.populations.push_back(a);
      tn.populations.push_back(b);
    }
    Matrix4 ref = p_th.cast<Complex>().asDiagonal();
    const MpembaReport rep = detect_crossing(tf, tn, Metric::trace_distance, ref);
    const double target = closed_form::trace_distance_crossing_time(th, k0);
    const double got = rep.crossing_time ? *rep.crossing_time : -1.0;
    push("crossing_detector", std::abs(got - target) / target, 1e-6);
  }

  return out;
}

}  // namespace qmpemba
