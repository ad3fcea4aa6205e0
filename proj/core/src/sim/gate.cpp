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

#include "cvqe/sim/gate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cvqe/errors.h"

namespace cvqe {
namespace {

constexpr Complex kI{0.0, 1.0};

CMatrix two_by_two(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

CMatrix single_qubit_matrix(GateKind kind, double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const double r = std::numbers::sqrt2 / 2;
  switch (kind) {
    case GateKind::kX:
      return two_by_two(0, 1, 1, 0);
    case GateKind::kY:
      return two_by_two(0, -kI, kI, 0);
    case GateKind::kZ:
      return two_by_two(1, 0, 0, -1);
    case GateKind::kH:
      return two_by_two(r, r, r, -r);
    case GateKind::kRX:
      return two_by_two(c, -kI * s, -kI * s, c);
    case GateKind::kRY:
      return two_by_two(c, -s, s, c);
    case GateKind::kRZ:
      return two_by_two(std::exp(-kI * (angle / 2)), 0, 0, std::exp(kI * (angle / 2)));
    default:
      throw std::logic_error("single_qubit_matrix: not a single-qubit kind");
  }
}

CMatrix controlled(const CMatrix& u) {
  const std::size_t d = u.rows();
  CMatrix m = CMatrix::identity(2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(d + i, d + j) = u(i, j);
  return m;
}

}  // namespace

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::kX:
    case GateKind::kY:
    case GateKind::kZ:
    case GateKind::kH:
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
      return 1;
    case GateKind::kCSWAP:
      return 3;
    default:
      return 2;
  }
}

bool has_angle(GateKind kind) {
  switch (kind) {
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
    case GateKind::kCRX:
    case GateKind::kCRY:
    case GateKind::kCRZ:
      return true;
    default:
      return false;
  }
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kH: return "H";
    case GateKind::kRX: return "RX";
    case GateKind::kRY: return "RY";
    case GateKind::kRZ: return "RZ";
    case GateKind::kCNOT: return "CNOT";
    case GateKind::kCZ: return "CZ";
    case GateKind::kCRX: return "CRX";
    case GateKind::kCRY: return "CRY";
    case GateKind::kCRZ: return "CRZ";
    case GateKind::kCH: return "CH";
    case GateKind::kCSWAP: return "CSWAP";
  }
  return "?";
}

CMatrix gate_matrix(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::kCNOT:
      return controlled(single_qubit_matrix(GateKind::kX, 0));
    case GateKind::kCZ:
      return controlled(single_qubit_matrix(GateKind::kZ, 0));
    case GateKind::kCRX:
      return controlled(single_qubit_matrix(GateKind::kRX, gate.angle));
    case GateKind::kCRY:
      return controlled(single_qubit_matrix(GateKind::kRY, gate.angle));
    case GateKind::kCRZ:
      return controlled(single_qubit_matrix(GateKind::kRZ, gate.angle));
    case GateKind::kCH:
      return controlled(single_qubit_matrix(GateKind::kH, 0));
    case GateKind::kCSWAP: {
      CMatrix swap(4, 4);
      swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
      return controlled(swap);
    }
    default:
      return single_qubit_matrix(gate.kind, gate.angle);
  }
}

void validate_gate(const Gate& gate, int num_qubits) {
  if (static_cast<int>(gate.targets.size()) != arity(gate.kind))
    throw ValidationError(to_string(gate.kind) + ": wrong number of targets");
  for (int q : gate.targets)
    if (q < 0 || q >= num_qubits) throw std::out_of_range(to_string(gate.kind) + ": target qubit out of range");
  for (std::size_t i = 0; i < gate.targets.size(); ++i)
    for (std::size_t j = i + 1; j < gate.targets.size(); ++j)
      if (gate.targets[i] == gate.targets[j]) throw ValidationError(to_string(gate.kind) + ": repeated target");
}

void apply_matrix(StateVector& state, const CMatrix& m, const std::vector<int>& qubits) {
  const std::size_t k = qubits.size();
  const std::size_t sub = std::size_t{1} << k;
  if (m.rows() != sub || m.cols() != sub) throw DimensionError("apply_matrix: matrix does not match qubit count");
  for (int q : qubits)
    if (q < 0 || q >= state.num_qubits()) throw std::out_of_range("apply_matrix: qubit out of range");

  std::vector<std::uint64_t> offsets(sub, 0);
  std::uint64_t touched = 0;
  for (std::size_t s = 0; s < sub; ++s)
    for (std::size_t b = 0; b < k; ++b)
      if ((s >> (k - 1 - b)) & 1U) offsets[s] |= state.mask(qubits[b]);
  for (int q : qubits) touched |= state.mask(q);

  auto amps = state.amplitudes();
  std::vector<Complex> in(sub), out(sub);
  for (std::uint64_t base = 0; base < amps.size(); ++base) {
    if (base & touched) continue;
    for (std::size_t s = 0; s < sub; ++s) in[s] = amps[base | offsets[s]];
    for (std::size_t r = 0; r < sub; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < sub; ++c) acc += m(r, c) * in[c];
      out[r] = acc;
    }
    for (std::size_t s = 0; s < sub; ++s) amps[base | offsets[s]] = out[s];
  }
}

void apply_gate(StateVector& state, const Gate& gate) {
  validate_gate(gate, state.num_qubits());
  auto amps = state.amplitudes();
  switch (gate.kind) {
    case GateKind::kX: {
      const auto m = state.mask(gate.targets[0]);
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if (!(i & m)) std::swap(amps[i], amps[i | m]);
      return;
    }
    case GateKind::kZ: {
      const auto m = state.mask(gate.targets[0]);
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if (i & m) amps[i] = -amps[i];
      return;
    }
    case GateKind::kCNOT: {
      const auto c = state.mask(gate.targets[0]), t = state.mask(gate.targets[1]);
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if ((i & c) && !(i & t)) std::swap(amps[i], amps[i | t]);
      return;
    }
    case GateKind::kCSWAP: {
      const auto c = state.mask(gate.targets[0]), a = state.mask(gate.targets[1]), b = state.mask(gate.targets[2]);
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if ((i & c) && (i & a) && !(i & b)) std::swap(amps[i], amps[(i & ~a) | b]);
      return;
    }
    default:
      apply_matrix(state, gate_matrix(gate), gate.targets);
  }
}

}  // namespace cvqe
