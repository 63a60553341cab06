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

#include "qmpemba/types.hpp"

namespace qmpemba {

// Unit convention: every frequency and rate is stored in rad/s, except the
// scalar coupling which is entered in Hz and multiplied by 2*pi where the
// Hamiltonian requires it.

struct SystemParams {
  double omega0 = 0.0;        // Larmor angular frequency (rad/s)
  double delta_offset = 0.0;  // resonance offset (rad/s)
  double j_coupling = 0.0;    // scalar coupling (Hz)
  double epsilon = 0.0;       // polarization, |epsilon| < 1e-3
};

struct BathParams {
  double b_dipolar = 0.0;  // dipolar coupling constant (rad/s)
  double tau_c = 1.0;      // bath correlation time (s), > 0
  double csa_d = 0.0;      // shielding-anisotropy constant (rad/s), 0 disables CSA
  bool include_cross_correlation = false;
};

enum class Frame { lab, interaction };
enum class Coupling { ising, full_scalar };

/// linearized: K(m omega0) ~ K0 (1 + m epsilon); exact_lorentzian keeps the
/// full Lorentzian profile times exp(m epsilon).
enum class SpectralMode { linearized, exact_lorentzian };

struct Channels {
  bool dipolar = true;
  bool csa = false;
  bool cross = false;
};

struct LiouvillianOptions {
  Coupling coupling = Coupling::ising;
  SpectralMode spectral_mode = SpectralMode::linearized;
  Channels channels{};
  /// Rescales all channel strengths so the dipolar zero-frequency rate equals
  /// this value; used for dimensionless runs (K0 = 1, time in units of 1/K0).
  std::optional<double> k0_override;
  /// Extreme-narrowing guard for the linearized path: require
  /// |omega0 tau_c| <= this.
  double narrowing_threshold = 1e-2;
};

Matrix4 hamiltonian(const SystemParams& p, Frame frame, Coupling coupling);

/// [1 + 2 epsilon (I1z + I2z)] / 4
Matrix4 thermal_state(const SystemParams& p);

/// K(x) = 12 b^2 tau_c / (5 (1 + x^2 tau_c^2)); corrected multiplies the
/// detailed-balance factor exp(x epsilon / omega0).
double spectral_density(double x, const BathParams& bp, const SystemParams& p,
                        bool corrected);

/// Extreme-narrowing form K0 (1 + m epsilon) at x = m omega0.
double spectral_density_narrowed(int m, const BathParams& bp, const SystemParams& p);

/// K0 = 12 b^2 tau_c / 5
double k0_rate(const BathParams& bp);

/// omega0 tau_c, the extreme-narrowing diagnostic.
double narrowing_product(const SystemParams& p, const BathParams& bp);

/// epsilon = -omega0 hbar / (2 k_B T)
double epsilon_from_temperature(double omega0, double temperature);

/// Vectorized Gamma[A,B]: rho -> A rho B - (1/2){BA, rho}   (16x16)
Superoperator dissipator(const Matrix4& a, const Matrix4& b);

/// Vectorized rho -> -i [H, rho]
Superoperator hamiltonian_commutator(const Matrix4& h);

/// Full 16x16 generator in the interaction frame:
///   L = -i[H,.] + sum_m K(m omega0) Gamma[T_2m, T_2m^dag]  (+ optional CSA
/// and cross-correlation sums), trace preserving by construction.
Superoperator build_liouvillian(const SystemParams& p, const BathParams& bp,
                                const LiouvillianOptions& opts = {});

}  // namespace qmpemba
