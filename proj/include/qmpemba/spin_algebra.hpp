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

#include <array>

#include "qmpemba/types.hpp"

namespace qmpemba {

// Fixed operators of the two spin-1/2 system. Basis ordering is
// |00>,|01>,|10>,|11> with |0> the +1 eigenstate of sigma_z; spin 1 is the
// left tensor factor.

enum class Axis { x, y, z, plus, minus };
enum class PulseAxis { x, y, minus_x, minus_y };
enum class PulseTarget { spin1, spin2, both };

Matrix2 single_spin_operator(Axis axis);

/// Two-spin embedding I_{k,axis} (identity on the other spin), spin_index in {1, 2}.
Matrix4 spin_operator(int spin_index, Axis axis);

/// I1 . I2
Matrix4 spin_dot_product();

/// Rank-2 irreducible spherical tensor T_{2m} of the spin pair, |m| <= 2:
///   T_0    = (1/sqrt6) (3 I1z I2z - I1.I2)
///   T_{+-1} = -+ (1/2) (I1_{+-} I2z + I1z I2_{+-})
///   T_{+-2} =    (1/2) I1_{+-} I2_{+-}
Matrix4 spherical_tensor(int m);

/// T_{2m} of the static field direction z with one spin: T_0 = (2/sqrt6) I_kz,
/// T_{+-1} = -+ (1/2) I_{k,+-}, T_{+-2} = 0.
Matrix4 spherical_tensor_field(int m, int spin_index);

/// exp(-i angle I_{axis,target}); minus axes negate the generator.
Matrix4 rotation_pulse(double angle, PulseAxis axis, PulseTarget target);

struct CoherenceComponent {
  int order;          // m in -2..2
  Matrix4 component;  // the elements of that order, zero elsewhere
};

/// Coherence order of |row><col| under [I1z + I2z, .] = m (.). With the basis
/// above this is M(row) - M(col), M = (1, 0, 0, -1). Sign convention s = +1:
/// [I1z + I2z, spherical_tensor(m)] = +m spherical_tensor(m).
int coherence_order(int row, int col);

/// Split into the five order blocks m = -2..2; components sum to the input.
std::array<CoherenceComponent, 5> coherence_decompose(const Matrix4& m);

}  // namespace qmpemba
