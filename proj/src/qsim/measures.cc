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

#include "bellconf/qsim/measures.h"

#include <algorithm>
#include <cmath>

#include "bellconf/errors.h"
#include "kernels.h"

namespace bellconf::qsim {
namespace {

struct Split {
  std::vector<int> keep;
  std::vector<int> env;
};

Split split_qubits(int num_qubits, std::span<const int> keep_qubits) {
  if (keep_qubits.empty()) throw ArgumentError("keep_qubits must be nonempty");
  Split s;
  std::vector<bool> seen(num_qubits, false);
  for (int q : keep_qubits) {
    if (q < 0 || q >= num_qubits) {
      throw ArgumentError("keep qubit " + std::to_string(q) + " out of range");
    }
    if (seen[q]) throw ArgumentError("keep qubit " + std::to_string(q) + " repeated");
    seen[q] = true;
    s.keep.push_back(q);
  }
  for (int q = 0; q < num_qubits; ++q) {
    if (!seen[q]) s.env.push_back(q);
  }
  return s;
}

size_t scatter(size_t bits, const std::vector<int>& positions) {
  size_t out = 0;
  for (size_t k = 0; k < positions.size(); ++k) {
    if ((bits >> k) & 1) out |= size_t{1} << positions[k];
  }
  return out;
}

internal::Mat2 pauli_matrix(Pauli p) {
  const Amplitude i{0, 1};
  switch (p) {
    case Pauli::kX: return {0, 1, 1, 0};
    case Pauli::kY: return {0, -i, i, 0};
    case Pauli::kZ: return {1, 0, 0, -1};
    default: return {1, 0, 0, 1};
  }
}

void apply_pauli_string(std::span<Amplitude> v, const PauliString& p) {
  for (size_t q = 0; q < p.size(); ++q) {
    if (p[q] != Pauli::kI) internal::apply_1q(v, static_cast<int>(q), pauli_matrix(p[q]));
  }
}

}  // namespace

DensityMatrix reduced_density_matrix(const DensityMatrix& rho,
                                     std::span<const int> keep_qubits) {
  Split s = split_qubits(rho.num_qubits(), keep_qubits);
  const size_t keep_dim = size_t{1} << s.keep.size();
  const size_t env_dim = size_t{1} << s.env.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
  for (size_t i = 0; i < keep_dim; ++i) {
    size_t row_base = scatter(i, s.keep);
    for (size_t j = 0; j < keep_dim; ++j) {
      size_t col_base = scatter(j, s.keep);
      Amplitude acc = 0;
      for (size_t e = 0; e < env_dim; ++e) {
        size_t env_bits = scatter(e, s.env);
        acc += rho(static_cast<int>(row_base | env_bits), static_cast<int>(col_base | env_bits));
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix reduced_density_matrix(const StateVector& state,
                                     std::span<const int> keep_qubits) {
  Split s = split_qubits(state.num_qubits(), keep_qubits);
  const size_t keep_dim = size_t{1} << s.keep.size();
  const size_t env_dim = size_t{1} << s.env.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
  for (size_t e = 0; e < env_dim; ++e) {
    size_t env_bits = scatter(e, s.env);
    for (size_t i = 0; i < keep_dim; ++i) {
      Amplitude a = state[scatter(i, s.keep) | env_bits];
      if (a == Amplitude{0}) continue;
      for (size_t j = 0; j < keep_dim; ++j) {
        out(i, j) += a * std::conj(state[scatter(j, s.keep) | env_bits]);
      }
    }
  }
  return DensityMatrix(std::move(out));
}

double purity(const DensityMatrix& rho) {
  rho.validate(1e-10);
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().cwiseAbs2().sum();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  rho.validate(1e-10);
  double h = 0;
  for (double lambda : rho.eigenvalues()) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0) h -= lambda * std::log2(lambda);
  }
  return h;
}

double concurrence(const StateVector& state) {
  if (state.num_qubits() != 2) {
    throw ArgumentError("concurrence is defined here for 2-qubit states only");
  }
  double c = 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
  return std::clamp(c, 0.0, 1.0);
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> ops;
  for (char ch : text) {
    switch (ch) {
      case 'I': ops.push_back(Pauli::kI); break;
      case 'X': ops.push_back(Pauli::kX); break;
      case 'Y': ops.push_back(Pauli::kY); break;
      case 'Z': ops.push_back(Pauli::kZ); break;
      default: throw ArgumentError(std::string("bad Pauli character '") + ch + "'");
    }
  }
  return PauliString(std::move(ops));
}

double expectation(const StateVector& state, const PauliString& observable) {
  if (observable.size() != static_cast<size_t>(state.num_qubits())) {
    throw ArgumentError("observable width does not match the state");
  }
  std::vector<Amplitude> moved(state.amplitudes().begin(), state.amplitudes().end());
  apply_pauli_string(moved, observable);
  Amplitude acc = 0;
  for (size_t i = 0; i < moved.size(); ++i) acc += std::conj(state[i]) * moved[i];
  return acc.real();
}

double expectation(const DensityMatrix& rho, const PauliString& observable) {
  if (observable.size() != static_cast<size_t>(rho.num_qubits())) {
    throw ArgumentError("observable width does not match the state");
  }
  Eigen::MatrixXcd m = rho.matrix();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    apply_pauli_string(std::span<Amplitude>(m.col(c).data(), static_cast<size_t>(m.rows())),
                       observable);
  }
  return m.trace().real();
}

}  // namespace bellconf::qsim
