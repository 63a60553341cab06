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

#include "qmpemba/relaxation_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "qmpemba/spin_algebra.hpp"

namespace qmpemba {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHbar = 1.054571817e-34;      // J s
constexpr double kBoltzmann = 1.380649e-23;    // J / K
const Complex kI(0.0, 1.0);

void check_system(const SystemParams& p) {
  if (std::abs(p.epsilon) >= 1e-3)
    throw std::invalid_argument("|epsilon| must be < 1e-3 (first-order regime)");
}

void check_bath(const BathParams& bp) {
  if (bp.tau_c <= 0.0) throw std::invalid_argument("tau_c must be positive");
  if (bp.b_dipolar < 0.0) throw std::invalid_argument("b_dipolar must be nonnegative");
}

}  // namespace

Matrix4 hamiltonian(const SystemParams& p, Frame frame, Coupling coupling) {
  const Matrix4 i1z = spin_operator(1, Axis::z);
  const Matrix4 i2z = spin_operator(2, Axis::z);
  const double w0 = frame == Frame::lab ? p.omega0 : 0.0;
  Matrix4 h = (w0 - p.delta_offset / 2.0) * i1z + (w0 + p.delta_offset / 2.0) * i2z;
  const double j = kTwoPi * p.j_coupling;
  h += j * (coupling == Coupling::ising ? Matrix4(i1z * i2z) : spin_dot_product());
  return h;
}

Matrix4 thermal_state(const SystemParams& p) {
  check_system(p);
  const Matrix4 iz = spin_operator(1, Axis::z) + spin_operator(2, Axis::z);
  return (Matrix4::Identity() + 2.0 * p.epsilon * iz) / 4.0;
}

double spectral_density(double x, const BathParams& bp, const SystemParams& p,
                        bool corrected) {
  check_bath(bp);
  const double k = 12.0 * bp.b_dipolar * bp.b_dipolar * bp.tau_c /
                   (5.0 * (1.0 + x * x * bp.tau_c * bp.tau_c));
  if (!corrected) return k;
  if (p.omega0 == 0.0) throw std::invalid_argument("temperature correction needs omega0 != 0");
  return k * std::exp(x * p.epsilon / p.omega0);
}

double spectral_density_narrowed(int m, const BathParams& bp, const SystemParams& p) {
  check_bath(bp);
  return k0_rate(bp) * (1.0 + m * p.epsilon);
}

double k0_rate(const BathParams& bp) {
  return 12.0 * bp.b_dipolar * bp.b_dipolar * bp.tau_c / 5.0;
}

double narrowing_product(const SystemParams& p, const BathParams& bp) {
  return std::abs(p.omega0) * bp.tau_c;
}

double epsilon_from_temperature(double omega0, double temperature) {
  if (temperature <= 0.0) throw std::invalid_argument("temperature must be positive");
  return -omega0 * kHbar / (2.0 * kBoltzmann * temperature);
}

Superoperator dissipator(const Matrix4& a, const Matrix4& b) {
  const Matrix4 id = Matrix4::Identity();
  const Matrix4 ba = b * a;
  Superoperator s = Eigen::kroneckerProduct(b.transpose(), a);
  s -= 0.5 * Eigen::kroneckerProduct(id, ba);
  s -= 0.5 * Eigen::kroneckerProduct(ba.transpose(), id);
  return s;
}

Superoperator hamiltonian_commutator(const Matrix4& h) {
  const Matrix4 id = Matrix4::Identity();
  Superoperator s = Eigen::kroneckerProduct(id, h);
  s -= Eigen::kroneckerProduct(h.transpose(), id);
  return -kI * s;
}

Superoperator build_liouvillian(const SystemParams& p, const BathParams& bp,
                                const LiouvillianOptions& opts) {
  check_system(p);
  check_bath(bp);
  if ((opts.channels.csa || opts.channels.cross) && bp.csa_d == 0.0)
    throw std::invalid_argument("csa/cross channels require csa_d != 0");
  if (opts.spectral_mode == SpectralMode::linearized &&
      narrowing_product(p, bp) > opts.narrowing_threshold && !opts.k0_override)
    throw std::invalid_argument("linearized spectral density outside extreme narrowing");

  const double k0_dd = k0_rate(bp);
  double scale = 1.0;
  if (opts.k0_override) {
    if (k0_dd <= 0.0)
      throw std::invalid_argument("k0_override requires a nonzero dipolar constant");
    scale = *opts.k0_override / k0_dd;
  }

  // rate of channel strength k0 at x = m omega0
  auto rate = [&](double k0, int m) {
    if (opts.spectral_mode == SpectralMode::linearized) return k0 * (1.0 + m * p.epsilon);
    const double x = m * p.omega0;
    return k0 / (1.0 + x * x * bp.tau_c * bp.tau_c) * std::exp(m * p.epsilon);
  };

  Superoperator l = hamiltonian_commutator(hamiltonian(p, Frame::interaction, opts.coupling));

  if (opts.channels.dipolar) {
    for (int m = -2; m <= 2; ++m) {
      const Matrix4 t = spherical_tensor(m);
      l += scale * rate(k0_dd, m) * dissipator(t, t.adjoint());
    }
  }
  if (opts.channels.csa) {
    const double k0_csa = 12.0 * bp.csa_d * bp.csa_d * bp.tau_c / 5.0;
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int m = -1; m <= 1; ++m) {
          const Matrix4 tj = spherical_tensor_field(m, j);
          const Matrix4 tk = spherical_tensor_field(m, k);
          l += scale * rate(k0_csa, m) * dissipator(tj, tk.adjoint());
        }
  }
  if (opts.channels.cross) {
    const double k0_cc = -12.0 * bp.b_dipolar * bp.csa_d * bp.tau_c / 5.0;
    for (int j = 1; j <= 2; ++j)
      for (int m = -1; m <= 1; ++m) {
        const Matrix4 td = spherical_tensor(m);
        const Matrix4 tf = spherical_tensor_field(m, j);
        // both orderings, keeping the generator hermiticity-preserving
        l += scale * rate(k0_cc, m) *
             (dissipator(td, tf.adjoint()) + dissipator(tf, td.adjoint()));
      }
  }
  return l;
}

}  // namespace qmpemba
