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

#include <cstdint>
#include <numbers>
#include <vector>

#include "bellconf/qsim/circuit.h"

namespace bellconf::bell {

/// CHSH measurement half-angles. A stored angle phi selects the observable
/// O(phi) = cos(2 phi) Z + sin(2 phi) X, measured as Ry(-2 phi) then Z.
struct ChshSettings {
  double a = 0;
  double a_prime = std::numbers::pi / 4;
  double b = std::numbers::pi / 8;
  double b_prime = -std::numbers::pi / 8;
};

/// Confounding Strength of a CHSH value: |S| / 2.
double confounding_strength(double s);

/// |psi(theta)> = cos(theta)|00> + sin(theta)|11> via Ry(2 theta), CNOT.
qsim::Circuit partially_entangled_state(double theta);

/// |Phi+> = (|00> + |11>) / sqrt(2).
qsim::Circuit bell_pair();

/// Appends the O(alpha) x O(beta) basis rotations and Z measurements
/// (qubit 0 -> slot 0, qubit 1 -> slot 1) to a 2-qubit preparation.
qsim::Circuit correlator_circuit(const qsim::Circuit& prep, double alpha, double beta);

/// Sampled E(alpha, beta) = sum (-1)^(bitA xor bitB) freq.
double measure_correlator(const qsim::Circuit& prep, double alpha, double beta,
                          uint64_t shots, uint64_t seed);

/// Born-rule E(alpha, beta) from exact_probabilities.
double exact_correlator(const qsim::Circuit& prep, double alpha, double beta);

/// The four correlators in S order: (a,b), (a,b'), (a',b), (a',b').
struct ChshCorrelators {
  double e_ab = 0, e_abp = 0, e_apb = 0, e_apbp = 0;
  double s() const { return e_ab + e_abp + e_apb - e_apbp; }
};

/// Correlator k runs on seed derive_seed(seed, {k}).
ChshCorrelators measure_chsh(const qsim::Circuit& prep, const ChshSettings& settings,
                             uint64_t shots, uint64_t seed);
ChshCorrelators exact_chsh(const qsim::Circuit& prep, const ChshSettings& settings);

double chsh_s(const qsim::Circuit& prep, const ChshSettings& settings, uint64_t shots,
              uint64_t seed);
double exact_chsh_s(const qsim::Circuit& prep, const ChshSettings& settings);

/// Confounding Strength with its per-trial distribution.
struct CsEstimate {
  double cs = 0;          // mean per-trial CS
  double s_value = 0;     // mean per-trial |S|, so cs == s_value / 2
  double std_error = 0;   // standard error of the mean CS
  int n_trials = 0;
  std::vector<double> trial_values;

  static CsEstimate from_trials(std::vector<double> trial_cs);
};

}  // namespace bellconf::bell
