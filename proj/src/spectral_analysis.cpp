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

#include "qmpemba/spectral_analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qmpemba {

namespace {

void check_full(const Superoperator& l) {
  if (l.rows() != 16 || l.cols() != 16)
    throw std::invalid_argument("expected the full 16x16 generator");
}

}  // namespace

Superoperator population_generator(const Superoperator& liouvillian) {
  check_full(liouvillian);
  const int idx[4] = {vec_index(0, 0), vec_index(1, 1), vec_index(2, 2), vec_index(3, 3)};
  Superoperator g(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = liouvillian(idx[r], idx[c]);
  return g;
}

Superoperator zero_quantum_block(const Superoperator& liouvillian) {
  check_full(liouvillian);
  const int idx[6] = {vec_index(0, 0), vec_index(1, 1), vec_index(2, 2),
                      vec_index(3, 3), vec_index(1, 2), vec_index(2, 1)};
  Superoperator g(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) g(r, c) = liouvillian(idx[r], idx[c]);
  return g;
}

ModeDecomposition eigendecompose(const Superoperator& generator) {
  const auto n = generator.rows();
  if (n != generator.cols() || n < 2 || n > 16)
    throw std::invalid_argument("eigendecompose: square generator of dim 2..16 expected");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(generator, true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: QR iteration failed to converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto& ev = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ev(a).real() != ev(b).real()) return ev(a).real() > ev(b).real();
    return ev(a).imag() > ev(b).imag();
  });

  ModeDecomposition md;
  md.eigenvalues.resize(n);
  md.right_vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    md.eigenvalues(k) = ev(order[k]);
    Eigen::VectorXcd v = solver.eigenvectors().col(order[k]);
    v.normalize();
    // rotate the first significant entry to the positive real axis
    for (int i = 0; i < n; ++i) {
      if (std::abs(v(i)) > 1e-8) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    }
    md.right_vectors.col(k) = v;
  }

  // left eigenvectors: rows of V^{-1}, already biorthonormal to the columns
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(md.right_vectors);
  if (!lu.isInvertible())
    throw std::runtime_error("eigendecompose: defective eigenvector matrix");
  md.left_vectors = lu.inverse();

  double scale = 0.0;
  for (int k = 0; k < n; ++k) scale = std::max(scale, std::abs(md.eigenvalues(k)));
  md.min_gap = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      md.min_gap = std::min(md.min_gap, std::abs(md.eigenvalues(a) - md.eigenvalues(b)));
  md.near_degenerate = md.min_gap < 1e-8 * scale;

  int st = 0;
  for (int k = 1; k < n; ++k)
    if (std::abs(md.eigenvalues(k)) < std::abs(md.eigenvalues(st))) st = k;
  md.stationary_index = st;
  return md;
}

Eigen::VectorXcd overlaps(const ModeDecomposition& md, const Eigen::VectorXd& p0) {
  if (p0.size() != md.left_vectors.cols())
    throw std::invalid_argument("overlaps: dimension mismatch");
  return md.left_vectors * p0.cast<Complex>();
}

Eigen::Matrix2d two_level_pair_generator(const Superoperator& population_gen) {
  if (population_gen.rows() != 4 || population_gen.cols() != 4)
    throw std::invalid_argument("expected the 4x4 population generator");
  const auto g = population_gen.real();
  // fold the constant p01 = p10 = 1/4 feed through the single-quantum
  // pathways into effective pair rates
  const double mid = (g(0, 1) + g(0, 2)) / 2.0;
  const double a = -g(0, 0) - mid;  // effective 00 -> 11
  const double b = g(0, 3) + mid;   // effective 11 -> 00
  Eigen::Matrix2d out;
  out << -a, b, a, -b;
  return out;
}

}  // namespace qmpemba
