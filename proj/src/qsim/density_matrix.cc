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

#include "bellconf/qsim/density_matrix.h"

#include <bit>
#include <cmath>
#include <sstream>

#include "bellconf/errors.h"

namespace bellconf::qsim {
namespace {

double hermiticity_error(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : rho_(std::move(entries)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
    throw ArgumentError("density matrix must be square and nonempty");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& state) {
  Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                        static_cast<Eigen::Index>(state.dim()));
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

int DensityMatrix::num_qubits() const {
  return std::countr_zero(static_cast<unsigned>(dim()));
}

void DensityMatrix::validate(double tolerance) const {
  double herm = hermiticity_error(rho_);
  if (herm > tolerance) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (max |rho - rho^dag| = " << herm << ")";
    throw NumericalError(msg.str());
  }
  Amplitude tr = rho_.trace();
  if (std::abs(tr - Amplitude{1}) > tolerance) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw NumericalError(msg.str());
  }
  std::vector<double> ev = eigenvalues();
  if (!ev.empty() && ev.front() < -1e-9) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << ev.front();
    throw NumericalError(msg.str());
  }
}

std::vector<double> DensityMatrix::eigenvalues() const {
  if (hermiticity_error(rho_) > 1e-10) {
    throw NumericalError("eigenvalues requested for a non-Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

}  // namespace bellconf::qsim
