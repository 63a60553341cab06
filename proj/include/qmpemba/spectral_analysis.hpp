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

namespace qmpemba {

/// Biorthonormalized spectrum of a (generally non-Hermitian) generator.
/// Modes are sorted by descending real part, so the stationary mode comes
/// first and index 1 is the slowest decay mode.
struct ModeDecomposition {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right_vectors;  // columns v_n, unit norm, first nonzero entry positive-real
  Eigen::MatrixXcd left_vectors;   // rows w_n, scaled so w_m . v_n = delta_mn
  int stationary_index = 0;
  double min_gap = 0.0;        // smallest pairwise eigenvalue distance
  bool near_degenerate = false;  // min_gap below 1e-8 x spectral scale
};

/// 4x4 restriction of the full generator to the populations.
Superoperator population_generator(const Superoperator& liouvillian);

/// 6x6 restriction to (p00, p01, p10, p11, c, c*) with c the coefficient of
/// |01><10|.
Superoperator zero_quantum_block(const Superoperator& liouvillian);

/// Dense general complex eigendecomposition (Hessenberg + shifted QR); left
/// eigenvectors from the inverse of the right-eigenvector matrix.
ModeDecomposition eigendecompose(const Superoperator& generator);

/// a_n = w_n . p0
Eigen::VectorXcd overlaps(const ModeDecomposition& md, const Eigen::VectorXd& p0);

/// Exact reduction of the population generator to the (p00, p11) pair under
/// the constraint p01 = p10 = 1/4: a standalone 2-level Markov generator
/// [[-a, b], [a, -b]] whose rate ratio b/a carries the double-quantum
/// Boltzmann factor.
Eigen::Matrix2d two_level_pair_generator(const Superoperator& population_gen);

}  // namespace qmpemba
