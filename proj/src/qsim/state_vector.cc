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

#include "bellconf/qsim/state_vector.h"

#include <bit>
#include <cmath>
#include <string>

#include "bellconf/errors.h"

namespace bellconf::qsim {

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw ConfigError("StateVector supports 1.." + std::to_string(kMaxQubits) +
                      " qubits, got " + std::to_string(num_qubits));
  }
  amps_.assign(size_t{1} << num_qubits, Amplitude{0});
  amps_[0] = 1;
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const size_t n = amplitudes.size();
  if (n < 2 || !std::has_single_bit(n) || n > (size_t{1} << kMaxQubits)) {
    throw ConfigError("amplitude count must be 2^n with 1 <= n <= 8, got " +
                      std::to_string(n));
  }
  StateVector s(std::countr_zero(n), std::move(amplitudes));
  if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
    throw NumericalError("amplitudes are not normalized");
  }
  return s;
}

double StateVector::norm_squared() const {
  double total = 0;
  for (const Amplitude& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::renormalize(double tolerance) {
  double n2 = norm_squared();
  if (n2 <= 0) throw NumericalError("state has zero norm");
  if (std::abs(n2 - 1.0) <= tolerance) return;
  double scale = 1.0 / std::sqrt(n2);
  for (Amplitude& a : amps_) a *= scale;
}

double StateVector::probability_one(int qubit) const {
  const size_t bit = size_t{1} << qubit;
  double p = 0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) p += std::norm(amps_[i]);
  }
  return p;
}

}  // namespace bellconf::qsim
