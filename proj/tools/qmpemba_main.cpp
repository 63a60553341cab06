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

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qmpemba/experiment.hpp"

namespace {

// exit codes: 0 ok, 1 usage error, 2 numerical failure, 3 invariant failure
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNumerical = 2;
constexpr int kInvariant = 3;

struct RawOptions {
  std::optional<std::string> preset, metric, coupling, channels, spectral_mode,
      b_unit, spacing, output;
  std::optional<double> theta, epsilon, tau_c, b, delta, omega0, j, csa_d, t_min, t_max;
  std::optional<int> points;
  std::optional<bool> dimensionless, rescale;
};

qmpemba::ExperimentConfig resolve(const RawOptions& raw) {
  using namespace qmpemba;
  const Preset preset =
      raw.preset ? preset_from_string(*raw.preset) : Preset::fig3a;
  ExperimentConfig cfg = preset_config(preset);
  if (raw.theta) cfg.theta_deg = *raw.theta;
  if (raw.metric) cfg.metric = metric_from_string(*raw.metric);
  if (raw.epsilon) cfg.epsilon = *raw.epsilon;
  if (raw.tau_c) cfg.tau_c = *raw.tau_c;
  if (raw.b) cfg.b_value = *raw.b;
  if (raw.b_unit) cfg.b_unit = b_unit_from_string(*raw.b_unit);
  if (raw.delta) cfg.delta_hz = *raw.delta;
  if (raw.omega0) cfg.omega0_hz = *raw.omega0;
  if (raw.j) cfg.j_hz = *raw.j;
  if (raw.csa_d) cfg.csa_d_hz = *raw.csa_d;
  if (raw.coupling) cfg.coupling = coupling_from_string(*raw.coupling);
  if (raw.channels) cfg.channels = channels_from_string(*raw.channels);
  if (raw.spectral_mode) cfg.spectral_mode = spectral_mode_from_string(*raw.spectral_mode);
  if (raw.t_min) cfg.grid.t_min = *raw.t_min;
  if (raw.t_max) cfg.grid.t_max = *raw.t_max;
  if (raw.points) cfg.grid.points = *raw.points;
  if (raw.spacing) {
    if (*raw.spacing == "log") cfg.grid.logarithmic = true;
    else if (*raw.spacing == "linear") cfg.grid.logarithmic = false;
    else throw std::invalid_argument("spacing must be log or linear");
  }
  if (raw.dimensionless) cfg.dimensionless = *raw.dimensionless;
  if (raw.rescale) cfg.rescale_by_epsilon = *raw.rescale;
  if (raw.output) cfg.output_path = *raw.output;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-spin dipolar relaxation and quantum Mpemba analysis"};
  app.require_subcommand(1);

  RawOptions raw;
  auto* run = app.add_subcommand("run", "Run an experiment preset and emit CSV + report");
  run->set_config("--config", "", "Plain key = value configuration file");
  run->add_option("--preset", raw.preset, "fig3a | fig3c | fig3b_overlaps | fig3d_genuine | custom");
  run->add_option("--theta", raw.theta, "Preparation angle (degrees)");
  run->add_option("--metric", raw.metric, "trace_distance | relative_entropy");
  run->add_option("--epsilon", raw.epsilon, "Polarization");
  run->add_option("--tau-c", raw.tau_c, "Bath correlation time (s)");
  run->add_option("--b", raw.b, "Dipolar coupling constant");
  run->add_option("--b-unit", raw.b_unit, "Unit of --b: hz (x 2 pi) or rad");
  run->add_option("--delta", raw.delta, "Resonance offset (Hz)");
  run->add_option("--omega0", raw.omega0, "Larmor frequency (Hz)");
  run->add_option("--j", raw.j, "Scalar coupling (Hz)");
  run->add_option("--csa-d", raw.csa_d, "Shielding anisotropy constant (Hz)");
  run->add_option("--coupling", raw.coupling, "ising | full_scalar");
  run->add_option("--channels", raw.channels, "Comma list of dipolar,csa,cross");
  run->add_option("--spectral-mode", raw.spectral_mode, "linearized | exact");
  run->add_option("--t-min", raw.t_min, "Grid start (units of 1/K0)");
  run->add_option("--t-max", raw.t_max, "Grid end (units of 1/K0)");
  run->add_option("--points", raw.points, "Grid points");
  run->add_option("--spacing", raw.spacing, "log | linear");
  run->add_option("--dimensionless", raw.dimensionless, "K0 = 1, time in 1/K0");
  run->add_option("--rescale-by-epsilon", raw.rescale, "Scale metric columns by 1/(2 eps) resp. its square");
  run->add_option("--output", raw.output, "Output basename (.csv and _report.txt)");

  auto* validate = app.add_subcommand("validate", "Run the invariant battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  try {
    if (run->parsed()) {
      const auto cfg = resolve(raw);
      const auto res = qmpemba::run_experiment(cfg);
      std::printf("wrote %s\n", res.csv_path.c_str());
      std::printf("wrote %s\n", res.report_path.c_str());
      std::printf("classification = %s\n",
                  qmpemba::to_string(res.report.classification).c_str());
      if (res.report.crossing_time)
        std::printf("crossing_time = %.9g\n", *res.report.crossing_time);
      return kOk;
    }
    if (validate->parsed()) {
      const auto results = qmpemba::run_invariant_suite();
      size_t failed = 0;
      std::printf("%-34s %-12s %-12s %s\n", "invariant", "value", "bound", "status");
      for (const auto& r : results) {
        std::printf("%-34s %-12.3e %-12.3e %s\n", r.name.c_str(), r.value, r.bound,
                    r.pass ? "pass" : "FAIL");
        if (!r.pass) ++failed;
      }
      if (failed) {
        std::printf("%zu invariant(s) failed\n", failed);
        return kInvariant;
      }
      std::printf("all %zu invariants pass\n", results.size());
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kNumerical;
  }
  return kUsage;
}
