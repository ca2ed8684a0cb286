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

#include <vector>

#include <Eigen/Dense>

#include "bellconf/qsim/state_vector.h"

namespace bellconf::qsim {

/// Mixed state as a dim x dim complex matrix, same basis ordering as
/// StateVector.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  /// |psi><psi|.
  static DensityMatrix pure(const StateVector& state);

  /// Maximally mixed state on `num_qubits` qubits.
  static DensityMatrix maximally_mixed(int num_qubits);

  int dim() const { return static_cast<int>(rho_.rows()); }
  int num_qubits() const;
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Amplitude operator()(int row, int col) const { return rho_(row, col); }

  Amplitude trace() const { return rho_.trace(); }

  /// Throws NumericalError unless the matrix is Hermitian and unit-trace
  /// within `tolerance` and has no eigenvalue below -1e-9.
  void validate(double tolerance = 1e-10) const;

  /// Eigenvalues in ascending order. Requires hermiticity within 1e-10.
  std::vector<double> eigenvalues() const;

 private:
  Eigen::MatrixXcd rho_;
};

}  // namespace bellconf::qsim
