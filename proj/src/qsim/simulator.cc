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

#include "bellconf/qsim/simulator.h"

#include <cmath>

#include "bellconf/errors.h"
#include "kernels.h"

namespace bellconf::qsim {
namespace {

int measure_and_collapse(StateVector& state, int qubit, Rng& rng) {
  double p1 = state.probability_one(qubit);
  int outcome = rng.uniform() < p1 ? 1 : 0;
  double p = outcome ? p1 : 1.0 - p1;
  internal::project(state.amplitudes(), qubit, outcome);
  double scale = 1.0 / std::sqrt(p);
  for (Amplitude& a : state.amplitudes()) a *= scale;
  return outcome;
}

void check_width(const StateVector& state, const GateOp& op) {
  int hi = op.kind == GateKind::kCnot ? std::max(op.qubit, op.target) : op.qubit;
  if (op.qubit < 0 || hi >= state.num_qubits()) {
    throw ConfigError(op.str() + ": qubit index out of range for " +
                      std::to_string(state.num_qubits()) + "-qubit state");
  }
}

// Density-matrix kernels. Left multiplication acts on columns; right
// multiplication by U^dag is done as (U (M)^dag)^dag.
template <typename Kernel>
void conjugate(Eigen::MatrixXcd& rho, Kernel&& kernel) {
  const Eigen::Index dim = rho.rows();
  for (Eigen::Index c = 0; c < dim; ++c) {
    kernel(std::span<Amplitude>(rho.col(c).data(), static_cast<size_t>(dim)));
  }
  rho.adjointInPlace();
  for (Eigen::Index c = 0; c < dim; ++c) {
    kernel(std::span<Amplitude>(rho.col(c).data(), static_cast<size_t>(dim)));
  }
  rho.adjointInPlace();
}

Eigen::MatrixXcd projected(const Eigen::MatrixXcd& rho, int qubit, int outcome) {
  const Eigen::Index bit = Eigen::Index{1} << qubit;
  Eigen::MatrixXcd out = rho;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      bool keep = (((r & bit) != 0) == (outcome != 0)) && (((c & bit) != 0) == (outcome != 0));
      if (!keep) out(r, c) = 0;
    }
  }
  return out;
}

void flip_qubit(Eigen::MatrixXcd& rho, int qubit) {
  conjugate(rho, [qubit](std::span<Amplitude> v) { internal::apply_x(v, qubit); });
}

using Branches = std::map<uint64_t, Eigen::MatrixXcd>;

void add_branch(Branches& out, uint64_t record, Eigen::MatrixXcd rho) {
  if (std::abs(rho.trace()) <= 1e-16) return;
  auto [it, inserted] = out.try_emplace(record, std::move(rho));
  if (!inserted) it->second += rho;
}

void apply_op_to_branches(Branches& branches, const GateOp& op) {
  if (op.is_unitary()) {
    for (auto& [record, rho] : branches) {
      conjugate(rho, [&op](std::span<Amplitude> v) { internal::apply_unitary_kernel(v, op); });
    }
    return;
  }
  Branches next;
  for (auto& [record, rho] : branches) {
    Eigen::MatrixXcd zero = projected(rho, op.qubit, 0);
    Eigen::MatrixXcd one = projected(rho, op.qubit, 1);
    switch (op.kind) {
      case GateKind::kMeasureZ: {
        uint64_t bit = uint64_t{1} << op.slot;
        add_branch(next, record & ~bit, std::move(zero));
        add_branch(next, record | bit, std::move(one));
        break;
      }
      case GateKind::kNonSelectiveZ:
        add_branch(next, record, zero + one);
        break;
      case GateKind::kReset:
        flip_qubit(one, op.qubit);
        add_branch(next, record, zero + one);
        break;
      default:
        break;
    }
  }
  branches = std::move(next);
}

Branches run_branches(const Circuit& circuit, Eigen::MatrixXcd initial) {
  Branches branches;
  branches.emplace(0, std::move(initial));
  for (const GateOp& op : circuit.ops()) apply_op_to_branches(branches, op);
  return branches;
}

Eigen::MatrixXcd ground_state(int num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  rho(0, 0) = 1;
  return rho;
}

double flip_probability(const RunOptions& options, int slot) {
  if (slot >= static_cast<int>(options.slot_flip_probability.size())) return 0;
  double p = options.slot_flip_probability[slot];
  if (!(p >= 0 && p <= 1)) throw ConfigError("slot flip probability must be in [0, 1]");
  return p;
}

}  // namespace

void apply_unitary(StateVector& state, const GateOp& op) {
  if (!op.is_unitary()) throw ConfigError(op.str() + " is not unitary");
  check_width(state, op);
  internal::apply_unitary_kernel(state.amplitudes(), op);
  state.renormalize(1e-12);
}

void apply_gate(StateVector& state, const GateOp& op, Rng& rng, uint64_t& record) {
  if (op.is_unitary()) {
    apply_unitary(state, op);
    return;
  }
  check_width(state, op);
  int outcome = measure_and_collapse(state, op.qubit, rng);
  switch (op.kind) {
    case GateKind::kMeasureZ:
      if (outcome) {
        record |= uint64_t{1} << op.slot;
      } else {
        record &= ~(uint64_t{1} << op.slot);
      }
      break;
    case GateKind::kReset:
      if (outcome) internal::apply_x(state.amplitudes(), op.qubit);
      break;
    default:
      break;
  }
}

StateVector prepare_state(const Circuit& circuit) {
  StateVector state(circuit.num_qubits());
  for (const GateOp& op : circuit.ops()) apply_unitary(state, op);
  return state;
}

Counts run_circuit(const Circuit& circuit, uint64_t shots, uint64_t seed,
                   const RunOptions& options) {
  if (shots == 0) throw ArgumentError("run_circuit requires shots >= 1");
  const int slots = circuit.num_classical_slots();
  std::vector<double> flips(slots);
  for (int s = 0; s < slots; ++s) flips[s] = flip_probability(options, s);

  // The deterministic unitary prefix is shared by every shot.
  const auto& ops = circuit.ops();
  size_t first_random = 0;
  StateVector prefix(circuit.num_qubits());
  while (first_random < ops.size() && ops[first_random].is_unitary()) {
    apply_unitary(prefix, ops[first_random]);
    ++first_random;
  }

  std::map<uint64_t, uint64_t> histogram;
  for (uint64_t shot = 0; shot < shots; ++shot) {
    Rng rng(derive_seed(seed, {shot}));
    StateVector state = prefix;
    uint64_t record = 0;
    for (size_t k = first_random; k < ops.size(); ++k) apply_gate(state, ops[k], rng, record);
    for (int s = 0; s < slots; ++s) {
      if (flips[s] > 0 && rng.bernoulli(flips[s])) record ^= uint64_t{1} << s;
    }
    ++histogram[record];
  }

  Counts counts;
  counts.total_shots = shots;
  counts.num_slots = slots;
  for (const auto& [record, n] : histogram) counts.table[format_bits(record, slots)] = n;
  return counts;
}

std::map<std::string, double> exact_probabilities(const Circuit& circuit,
                                                  const RunOptions& options) {
  const int slots = circuit.num_classical_slots();
  Branches branches = run_branches(circuit, ground_state(circuit.num_qubits()));
  std::map<uint64_t, double> dist;
  for (const auto& [record, rho] : branches) dist[record] += rho.trace().real();
  for (int s = 0; s < slots; ++s) {
    double p = flip_probability(options, s);
    if (p == 0) continue;
    std::map<uint64_t, double> next;
    for (const auto& [record, prob] : dist) {
      next[record] += (1 - p) * prob;
      next[record ^ (uint64_t{1} << s)] += p * prob;
    }
    dist = std::move(next);
  }
  std::map<std::string, double> out;
  double total = 0;
  for (const auto& [record, prob] : dist) {
    out[format_bits(record, slots)] += prob;
    total += prob;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw NumericalError("exact probabilities sum to " + std::to_string(total));
  }
  return out;
}

DensityMatrix apply_channel(const Circuit& circuit, const DensityMatrix& input) {
  if (input.dim() != (1 << circuit.num_qubits())) {
    throw ArgumentError("input state dimension does not match the circuit");
  }
  Branches branches = run_branches(circuit, input.matrix());
  const Eigen::Index dim = input.dim();
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [record, rho] : branches) total += rho;
  return DensityMatrix(std::move(total));
}

DensityMatrix exact_final_state(const Circuit& circuit) {
  return apply_channel(circuit, DensityMatrix(ground_state(circuit.num_qubits())));
}

}  // namespace bellconf::qsim
