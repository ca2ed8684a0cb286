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

#include "bellconf/qsim/circuit.h"

#include <sstream>

#include "bellconf/errors.h"
#include "bellconf/qsim/state_vector.h"

namespace bellconf::qsim {

std::string GateOp::str() const {
  std::ostringstream out;
  switch (kind) {
    case GateKind::kH: out << "H(" << qubit << ")"; break;
    case GateKind::kX: out << "X(" << qubit << ")"; break;
    case GateKind::kZ: out << "Z(" << qubit << ")"; break;
    case GateKind::kRy: out << "Ry(" << qubit << ", " << angle << ")"; break;
    case GateKind::kRz: out << "Rz(" << qubit << ", " << angle << ")"; break;
    case GateKind::kCnot: out << "CNOT(" << qubit << ", " << target << ")"; break;
    case GateKind::kMeasureZ: out << "MeasureZ(" << qubit << " -> c" << slot << ")"; break;
    case GateKind::kReset: out << "Reset(" << qubit << ")"; break;
    case GateKind::kNonSelectiveZ: out << "NonSelectiveZ(" << qubit << ")"; break;
  }
  return out.str();
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw ConfigError("circuit qubit count out of range: " + std::to_string(num_qubits));
  }
}

Circuit& Circuit::add(const GateOp& op) {
  auto check_qubit = [&](int q) {
    if (q < 0 || q >= num_qubits_) {
      throw ConfigError(op.str() + ": qubit index out of range for " +
                        std::to_string(num_qubits_) + "-qubit circuit");
    }
  };
  check_qubit(op.qubit);
  if (op.kind == GateKind::kCnot) {
    check_qubit(op.target);
    if (op.qubit == op.target) throw ConfigError(op.str() + ": control equals target");
  }
  if (op.kind == GateKind::kMeasureZ) {
    // 64-bit records.
    if (op.slot < 0 || op.slot >= 64) throw ConfigError(op.str() + ": bad classical slot");
    if (op.slot >= static_cast<int>(slot_used_.size())) slot_used_.resize(op.slot + 1);
    if (slot_used_[op.slot]) throw ConfigError(op.str() + ": classical slot already written");
    slot_used_[op.slot] = true;
    num_slots_ = std::max(num_slots_, op.slot + 1);
  }
  ops_.push_back(op);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_) {
    throw ConfigError("cannot append a wider circuit");
  }
  for (const GateOp& op : other.ops_) add(op);
  return *this;
}

Circuit& Circuit::measure_all() {
  for (int q = 0; q < num_qubits_; ++q) measure_z(q, q);
  return *this;
}

bool Circuit::is_unitary() const {
  for (const GateOp& op : ops_) {
    if (!op.is_unitary()) return false;
  }
  return true;
}

}  // namespace bellconf::qsim
