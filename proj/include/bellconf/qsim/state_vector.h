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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bellconf::qsim {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 8;

/// Dense pure state of 1..8 qubits.
///
/// Basis ordering is little-endian: qubit q is bit q of the basis index, so
/// amplitude index 0b10 is |q1=1, q0=0>.
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);

  /// Takes ownership of explicit amplitudes. The length must be a power of two
  /// and the norm must be 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  size_t dim() const { return amps_.size(); }

  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  const Amplitude& operator[](size_t i) const { return amps_[i]; }

  double norm_squared() const;

  /// Rescales to unit norm when |norm^2 - 1| exceeds `tolerance`.
  void renormalize(double tolerance = 1e-12);

  /// Probability that a Z measurement of `qubit` yields 1.
  double probability_one(int qubit) const;

 private:
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits_;
  std::vector<Amplitude> amps_;
};

}  // namespace bellconf::qsim
