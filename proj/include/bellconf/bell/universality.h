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

#include "bellconf/bell/chsh.h"
#include "bellconf/qsim/circuit.h"

namespace bellconf::bell {

// Mermin -------------------------------------------------------------------

/// (|000> + |111>) / sqrt(2).
qsim::Circuit ghz_state();

/// <M> for M = XXX - XYY - YXY - YYX on GHZ, from exact probabilities of the
/// four rotated-basis circuits.
double exact_mermin_expectation();

/// Sampled <M>; term k uses derive_seed(seed, {k}).
double sample_mermin_expectation(uint64_t shots, uint64_t seed);

/// |<M>| / 2 from sampling.
double mermin_cs(uint64_t shots, uint64_t seed);

/// max |<M>| over the 64 deterministic 3-party strategies.
int lhv_max_abs_mermin();

// CH ------------------------------------------------------------------------

/// CH = P11(a,b) + P11(a,b') + P11(a',b) - P11(a',b') - P1(a) - P1(b), where
/// "1" is the +1 outcome of O(phi) (register bit 0).
double ch_value(const qsim::Circuit& prep, const ChshSettings& settings, uint64_t shots,
                uint64_t seed);
double exact_ch_value(const qsim::Circuit& prep, const ChshSettings& settings);

// Hardy ---------------------------------------------------------------------

/// Two-qubit Hardy test: state cos(theta)|00> + sin(theta)|11> with the same
/// half-angles {alpha, alpha_prime} for both parties.
struct HardyConfig {
  double theta = 0;
  double alpha = 0;
  double alpha_prime = 0;

  ChshSettings settings() const { return {alpha, alpha_prime, alpha, alpha_prime}; }
};

/// Embedded optimum found by tools/hardy_search.py.
HardyConfig builtin_hardy();

/// Hardy terms: the forbidden event and the three premises that forbid it.
struct HardyTerms {
  double forbidden = 0;   // P(+,+ | a, b)
  double premise_1 = 0;   // P(+,- | a, b')
  double premise_2 = 0;   // P(-,+ | a', b)
  double premise_3 = 0;   // P(+,+ | a', b')

  /// forbidden - premises; <= 0 for every local model.
  double hardy_value() const { return forbidden - premise_1 - premise_2 - premise_3; }
  /// Probability of the classically impossible event not licensed by a
  /// violated premise: max(0, hardy_value()).
  double p_imp() const;
};

HardyTerms exact_hardy_terms(const qsim::Circuit& prep, const ChshSettings& settings);
HardyTerms sample_hardy_terms(const qsim::Circuit& prep, const ChshSettings& settings,
                              uint64_t shots, uint64_t seed);

/// Sampled P_imp for the built-in configuration.
double hardy_p_imp(uint64_t shots, uint64_t seed);

/// Largest Hardy value over the 16 deterministic strategies.
int lhv_max_hardy_value();

// Suite ---------------------------------------------------------------------

struct UniversalityEntry {
  const char* test = "";
  double classical_bound = 0;  // CS scale
  double exact_value = 0;      // CS from the exact oracle
  double sampled_value = 0;    // CS from sampling
};

struct UniversalityResult {
  UniversalityEntry chsh, ch, hardy, mermin;
};

/// Entry k samples with derive_seed(seed, {k}).
UniversalityResult run_universality(uint64_t shots, uint64_t seed);

}  // namespace bellconf::bell
