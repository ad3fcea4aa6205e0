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

#include "cvqe/vqe/ansatz.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cvqe/sim/pauli.h"

namespace cvqe {
namespace {

constexpr double kPi = std::numbers::pi;

// Qubits of the uncompressed layout.
constexpr int kUp1 = 0, kUp2 = 1, kDown1 = 2, kDown2 = 3;

void hopping_basis_change(Circuit& c, int a, int b) {
  c.add(Gate::cnot(a, b)).add(Gate::ch(b, a)).add(Gate::cnot(a, b));
}

std::array<int, 4> compute_hopping_table() {
  Circuit block(2);
  hopping_basis_change(block, 0, 1);
  const CMatrix u = circuit_unitary(block);
  PauliSum hop(2);
  hop.add(0.5, "XX").add(0.5, "YY");
  const CMatrix d = matmul(matmul(u, to_dense(hop)), adjoint(u));
  std::array<int, 4> table{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c && std::abs(d(r, c)) > 1e-12) throw std::logic_error("hopping suffix does not diagonalize XX+YY");
    const double v = d(r, r).real();
    table[r] = static_cast<int>(std::lround(v));
    if (std::abs(v - table[r]) > 1e-12) throw std::logic_error("hopping suffix eigenvalue is not an integer");
  }
  return table;
}

}  // namespace

std::string to_string(Representation rep) {
  return rep == Representation::kCompressed ? "compressed" : "uncompressed";
}

Representation parse_representation(std::string_view text) {
  if (text == "compressed") return Representation::kCompressed;
  if (text == "uncompressed") return Representation::kUncompressed;
  throw std::invalid_argument("unknown representation '" + std::string(text) + "'");
}

int circuit_qubits(Representation rep) { return rep == Representation::kCompressed ? 2 : 4; }

Circuit initial_state_circuit(Representation rep) {
  Circuit c(circuit_qubits(rep));
  if (rep == Representation::kCompressed) {
    c.add(Gate::ry(0, kPi / 2)).add(Gate::ry(1, kPi / 2));
    return c;
  }
  c.add(Gate::x(kUp1)).add(Gate::x(kDown1));
  for (auto [a, b] : {std::pair{kUp1, kUp2}, std::pair{kDown1, kDown2}})
    c.add(Gate::cnot(a, b)).add(Gate::cry(b, a, -kPi / 2)).add(Gate::cnot(a, b));
  return c;
}

Circuit ansatz_circuit(const AnsatzParams& params, Representation rep) {
  Circuit c = initial_state_circuit(rep);
  if (rep == Representation::kCompressed) {
    c.add(Gate::cnot(0, 1)).add(Gate::rz(1, -params.phi)).add(Gate::cnot(0, 1));
    c.add(Gate::rx(0, params.theta)).add(Gate::rx(1, params.theta));
    return c;
  }
  c.add(Gate::crz(kDown1, kUp1, params.phi)).add(Gate::crz(kDown2, kUp2, params.phi));
  for (auto [a, b] : {std::pair{kUp1, kUp2}, std::pair{kDown1, kDown2}})
    c.add(Gate::cnot(a, b)).add(Gate::crx(b, a, params.theta)).add(Gate::cnot(a, b));
  return c;
}

Circuit measurement_suffix(MeasurementKind kind, Representation rep) {
  Circuit c(circuit_qubits(rep));
  if (kind == MeasurementKind::kOnsite) return c;
  if (rep == Representation::kCompressed) {
    c.add(Gate::h(0)).add(Gate::h(1));
    return c;
  }
  hopping_basis_change(c, kUp1, kUp2);
  hopping_basis_change(c, kDown1, kDown2);
  return c;
}

Circuit measurement_circuit(const AnsatzParams& params, MeasurementKind kind, Representation rep) {
  Circuit c = ansatz_circuit(params, rep);
  c.append(measurement_suffix(kind, rep));
  return c;
}

const std::array<int, 4>& uncompressed_hopping_table() {
  static const std::array<int, 4> table = compute_hopping_table();
  return table;
}

}  // namespace cvqe
