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

#include <string>
#include <vector>

namespace bellconf::qsim {

enum class GateKind { kH, kX, kZ, kRy, kRz, kCnot, kMeasureZ, kReset, kNonSelectiveZ };

/// One circuit instruction. Build with the named constructors.
struct GateOp {
  GateKind kind = GateKind::kH;
  int qubit = 0;     // acted-on qubit; control for CNOT
  int target = -1;   // CNOT target
  double angle = 0;  // Ry/Rz rotation angle in radians
  int slot = -1;     // MeasureZ classical register slot

  static GateOp h(int q) { return {GateKind::kH, q}; }
  static GateOp x(int q) { return {GateKind::kX, q}; }
  static GateOp z(int q) { return {GateKind::kZ, q}; }
  static GateOp ry(int q, double angle) { return {GateKind::kRy, q, -1, angle}; }
  static GateOp rz(int q, double angle) { return {GateKind::kRz, q, -1, angle}; }
  static GateOp cnot(int control, int target) { return {GateKind::kCnot, control, target}; }
  static GateOp measure_z(int q, int slot) { return {GateKind::kMeasureZ, q, -1, 0, slot}; }
  static GateOp reset(int q) { return {GateKind::kReset, q}; }
  static GateOp non_selective_z(int q) { return {GateKind::kNonSelectiveZ, q}; }

  bool is_unitary() const {
    return kind != GateKind::kMeasureZ && kind != GateKind::kReset &&
           kind != GateKind::kNonSelectiveZ;
  }

  std::string str() const;
};

/// Ordered gate/measurement/reset program over a fixed qubit count.
///
/// Every op is validated on insertion: qubit indices must be in range, CNOT
/// control and target must differ, and each classical slot may be written by
/// at most one MeasureZ.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  Circuit& add(const GateOp& op);
  Circuit& append(const Circuit& other);

  Circuit& h(int q) { return add(GateOp::h(q)); }
  Circuit& x(int q) { return add(GateOp::x(q)); }
  Circuit& z(int q) { return add(GateOp::z(q)); }
  Circuit& ry(int q, double angle) { return add(GateOp::ry(q, angle)); }
  Circuit& rz(int q, double angle) { return add(GateOp::rz(q, angle)); }
  Circuit& cnot(int control, int target) { return add(GateOp::cnot(control, target)); }
  Circuit& measure_z(int q, int slot) { return add(GateOp::measure_z(q, slot)); }
  Circuit& reset(int q) { return add(GateOp::reset(q)); }
  Circuit& non_selective_z(int q) { return add(GateOp::non_selective_z(q)); }

  /// MeasureZ(q, q) for every qubit.
  Circuit& measure_all();

  int num_qubits() const { return num_qubits_; }
  int num_classical_slots() const { return num_slots_; }
  const std::vector<GateOp>& ops() const { return ops_; }

  bool has_measurements() const { return num_slots_ > 0; }
  bool is_unitary() const;

 private:
  int num_qubits_;
  int num_slots_ = 0;
  std::vector<bool> slot_used_;
  std::vector<GateOp> ops_;
};

}  // namespace bellconf::qsim
