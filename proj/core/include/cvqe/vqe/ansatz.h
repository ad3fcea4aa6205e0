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

#include <array>
#include <string>
#include <string_view>

#include "cvqe/sim/circuit.h"

namespace cvqe {

// Encodings of the 2x1 lattice: two qubits holding the spin-up and spin-down
// positions, or four JW qubits ordered (1up, 2up, 1down, 2down).
enum class Representation { kCompressed, kUncompressed };

std::string to_string(Representation rep);
// "compressed" | "uncompressed"; std::invalid_argument otherwise.
Representation parse_representation(std::string_view text);
int circuit_qubits(Representation rep);

// One Hamiltonian-variational layer: onsite evolution for phi, then hopping
// evolution for theta.
struct AnsatzParams {
  double phi = 0.0;
  double theta = 0.0;

  friend bool operator==(const AnsatzParams&, const AnsatzParams&) = default;
};

enum class MeasurementKind { kOnsite, kHopping };

// Ground state of the hopping part in the (1,1) sector.
//   compressed:   RY(pi/2) on both qubits, giving |+>|+>.
//   uncompressed: X on 1up and 1down, then per spin CNOT, CRY(-pi/2), CNOT,
//                 giving (|10> + |01>)/sqrt2 in each spin pair.
Circuit initial_state_circuit(Representation rep);

// Initial state followed by one layer.
//   compressed:   CNOT(0,1) RZ_1(-phi) CNOT(0,1), i.e. exp(i phi H_os) up to a
//                 global phase; then RX(theta) on both qubits.
//   uncompressed: CRZ(phi) on (1up->1down) and (2up->2down); then per spin
//                 CNOT(a,b) CRX(b->a, theta) CNOT(a,b).
// Both realize the same dynamics inside the (1,1) sector, with the landscape
// minimum at (atan(U/4t), pi/4).
Circuit ansatz_circuit(const AnsatzParams& params, Representation rep);

// Basis change before computational-basis readout.
//   onsite: nothing.
//   hopping, compressed: H on both qubits.
//   hopping, uncompressed: per spin CNOT(a,b) CH(b->a) CNOT(a,b).
Circuit measurement_suffix(MeasurementKind kind, Representation rep);

// ansatz_circuit followed by measurement_suffix.
Circuit measurement_circuit(const AnsatzParams& params, MeasurementKind kind, Representation rep);

// Eigenvalue of 1/2 (X_a X_b + Y_a Y_b) attached to each readout (a, b) after
// the uncompressed hopping suffix, indexed by 2a + b. Obtained by conjugating
// the operator through the suffix block; throws std::logic_error if the result
// is not diagonal.
const std::array<int, 4>& uncompressed_hopping_table();

}  // namespace cvqe
