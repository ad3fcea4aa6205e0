// Copyright 2026 The cvqe Authors
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

#include "cvqe/sim/matrix.h"
#include "cvqe/sim/state_vector.h"

namespace cvqe {

// Rotations are exp(-i * angle * P / 2) for P in {X, Y, Z}. Controlled kinds
// take the control as targets[0]; CSWAP takes (control, a, b).
enum class GateKind {
  kX,
  kY,
  kZ,
  kH,
  kRX,
  kRY,
  kRZ,
  kCNOT,
  kCZ,
  kCRX,
  kCRY,
  kCRZ,
  kCH,
  kCSWAP,
};

int arity(GateKind kind);
bool has_angle(GateKind kind);
std::string to_string(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<int> targets;
  double angle = 0.0;

  static Gate x(int q) { return {GateKind::kX, {q}}; }
  static Gate y(int q) { return {GateKind::kY, {q}}; }
  static Gate z(int q) { return {GateKind::kZ, {q}}; }
  static Gate h(int q) { return {GateKind::kH, {q}}; }
  static Gate rx(int q, double a) { return {GateKind::kRX, {q}, a}; }
  static Gate ry(int q, double a) { return {GateKind::kRY, {q}, a}; }
  static Gate rz(int q, double a) { return {GateKind::kRZ, {q}, a}; }
  static Gate cnot(int c, int t) { return {GateKind::kCNOT, {c, t}}; }
  static Gate cz(int c, int t) { return {GateKind::kCZ, {c, t}}; }
  static Gate crx(int c, int t, double a) { return {GateKind::kCRX, {c, t}, a}; }
  static Gate cry(int c, int t, double a) { return {GateKind::kCRY, {c, t}, a}; }
  static Gate crz(int c, int t, double a) { return {GateKind::kCRZ, {c, t}, a}; }
  static Gate ch(int c, int t) { return {GateKind::kCH, {c, t}}; }
  static Gate cswap(int c, int a, int b) { return {GateKind::kCSWAP, {c, a, b}}; }
};

// 2^k x 2^k unitary of the gate, with targets[0] as the most significant bit.
CMatrix gate_matrix(const Gate& gate);

// Throws std::out_of_range for targets outside [0, num_qubits) and
// ValidationError for a wrong target count or repeated targets.
void validate_gate(const Gate& gate, int num_qubits);

// Applies the gate in place. Norm preserving.
void apply_gate(StateVector& state, const Gate& gate);

// Applies an arbitrary 2^k x 2^k matrix to the listed qubits (first listed =
// most significant).
void apply_matrix(StateVector& state, const CMatrix& m, const std::vector<int>& qubits);

}  // namespace cvqe
