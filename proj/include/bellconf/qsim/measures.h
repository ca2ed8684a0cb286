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

#include <span>
#include <string_view>
#include <vector>

#include "bellconf/qsim/density_matrix.h"
#include "bellconf/qsim/state_vector.h"

namespace bellconf::qsim {

/// Partial trace keeping `keep_qubits`; keep_qubits[0] becomes the least
/// significant qubit of the result.
DensityMatrix reduced_density_matrix(const StateVector& state,
                                     std::span<const int> keep_qubits);
DensityMatrix reduced_density_matrix(const DensityMatrix& rho,
                                     std::span<const int> keep_qubits);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// Two-qubit pure-state concurrence 2|a00 a11 - a01 a10|.
double concurrence(const StateVector& state);

enum class Pauli { kI, kX, kY, kZ };

/// Tensor product of single-qubit Paulis; element q acts on qubit q.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {}

  /// "XZ" = X on qubit 0, Z on qubit 1. Accepts I, X, Y, Z.
  static PauliString parse(std::string_view text);

  size_t size() const { return ops_.size(); }
  Pauli operator[](size_t q) const { return ops_[q]; }

 private:
  std::vector<Pauli> ops_;
};

/// <psi|P|psi>.
double expectation(const StateVector& state, const PauliString& observable);

/// Tr(rho P).
double expectation(const DensityMatrix& rho, const PauliString& observable);

}  // namespace bellconf::qsim
