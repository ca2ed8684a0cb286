// Copyright 2026 The bellconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <span>

#include "bellconf/qsim/circuit.h"
#include "bellconf/qsim/state_vector.h"

namespace bellconf::qsim::internal {

// Row-major 2x2 matrix.
using Mat2 = std::array<Amplitude, 4>;

inline void apply_1q(std::span<Amplitude> v, int qubit, const Mat2& m) {
  const size_t bit = size_t{1} << qubit;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i & bit) continue;
    Amplitude a0 = v[i];
    Amplitude a1 = v[i | bit];
    v[i] = m[0] * a0 + m[1] * a1;
    v[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

inline void apply_x(std::span<Amplitude> v, int qubit) {
  const size_t bit = size_t{1} << qubit;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!(i & bit)) std::swap(v[i], v[i | bit]);
  }
}

inline void apply_cnot(std::span<Amplitude> v, int control, int target) {
  const size_t c = size_t{1} << control;
  const size_t t = size_t{1} << target;
  for (size_t i = 0; i < v.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(v[i], v[i | t]);
  }
}

// Zeroes every amplitude whose `qubit` bit differs from `outcome`.
inline void project(std::span<Amplitude> v, int qubit, int outcome) {
  const size_t bit = size_t{1} << qubit;
  for (size_t i = 0; i < v.size(); ++i) {
    if (((i & bit) != 0) != (outcome != 0)) v[i] = 0;
  }
}

inline Mat2 unitary_matrix(const GateOp& op) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (op.kind) {
    case GateKind::kH:
      return {s, s, s, -s};
    case GateKind::kX:
      return {0, 1, 1, 0};
    case GateKind::kZ:
      return {1, 0, 0, -1};
    case GateKind::kRy: {
      double c = std::cos(op.angle / 2), sn = std::sin(op.angle / 2);
      return {c, -sn, sn, c};
    }
    case GateKind::kRz: {
      Amplitude e = std::polar(1.0, op.angle / 2);
      return {std::conj(e), 0, 0, e};
    }
    default:
      return {1, 0, 0, 1};
  }
}

// Applies a unitary op to a vector of the full register dimension.
inline void apply_unitary_kernel(std::span<Amplitude> v, const GateOp& op) {
  switch (op.kind) {
    case GateKind::kX:
      apply_x(v, op.qubit);
      break;
    case GateKind::kCnot:
      apply_cnot(v, op.qubit, op.target);
      break;
    default:
      apply_1q(v, op.qubit, unitary_matrix(op));
  }
}

}  // namespace bellconf::qsim::internal
