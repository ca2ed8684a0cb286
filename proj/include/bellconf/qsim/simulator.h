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
#include <map>
#include <string>
#include <vector>

#include "bellconf/qsim/circuit.h"
#include "bellconf/qsim/counts.h"
#include "bellconf/qsim/density_matrix.h"
#include "bellconf/qsim/state_vector.h"
#include "bellconf/rng.h"

namespace bellconf::qsim {

/// Classical noise applied to the register after each shot.
struct RunOptions {
  /// Probability that the bit in slot i is flipped; missing entries are 0.
  std::vector<double> slot_flip_probability;
};

/// Applies one op in place. Unitary ops ignore `rng` and `record`.
///
/// MeasureZ samples the outcome from `rng`, collapses the state and writes bit
/// `op.slot` of `record`. Reset measures (discarding the bit) and flips the
/// qubit back to |0>. NonSelectiveZ measures and discards the outcome, one
/// trajectory of the Z-dephasing channel.
void apply_gate(StateVector& state, const GateOp& op, Rng& rng, uint64_t& record);

/// Applies a unitary op; throws ConfigError for non-unitary ops.
void apply_unitary(StateVector& state, const GateOp& op);

/// Final state of a purely unitary circuit started from |0...0>.
StateVector prepare_state(const Circuit& circuit);

/// Samples `shots` trajectories. Shot i draws from
/// Rng(derive_seed(seed, {i})), so the result depends only on the arguments.
Counts run_circuit(const Circuit& circuit, uint64_t shots, uint64_t seed,
                   const RunOptions& options = {});

/// Exact register distribution. MeasureZ, Reset and NonSelectiveZ are
/// propagated as channels on per-record density-matrix branches.
std::map<std::string, double> exact_probabilities(const Circuit& circuit,
                                                  const RunOptions& options = {});

/// Unconditional output state of the circuit (all records summed).
DensityMatrix exact_final_state(const Circuit& circuit);

/// Runs the circuit's ops as channels on an arbitrary input state.
DensityMatrix apply_channel(const Circuit& circuit, const DensityMatrix& input);

}  // namespace bellconf::qsim
