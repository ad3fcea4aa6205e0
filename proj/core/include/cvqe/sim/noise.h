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

#include <cstdint>
#include <span>
#include <vector>

#include "cvqe/sim/circuit.h"
#include "cvqe/sim/state_vector.h"

namespace cvqe {

// Independent classical bit flips applied at measurement.
struct ReadoutError {
  double p01 = 0.0;  // reads 1 when the qubit is 0
  double p10 = 0.0;  // reads 0 when the qubit is 1

  bool trivial() const { return p01 == 0.0 && p10 == 0.0; }
};

// Stochastic Pauli noise. After every one-qubit gate a uniformly random
// non-identity Pauli hits the target with probability p1; after every gate on
// two or more qubits a uniformly random non-identity Pauli string on its
// targets is inserted with probability p2.
//
// `readout` holds one entry per qubit, or a single entry shared by all qubits,
// or nothing for perfect readout.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  std::vector<ReadoutError> readout;

  static NoiseModel none() { return {}; }

  bool has_gate_noise() const { return p1 > 0.0 || p2 > 0.0; }
  bool has_readout_noise() const;
  ReadoutError readout_for(int qubit) const;
  // Readout errors expanded to one entry per qubit.
  std::vector<ReadoutError> readout_per_qubit(int num_qubits) const;

  // Throws ValidationError if any probability is outside [0, 1].
  void validate() const;
};

// Runs the circuit on `state`. Without gate noise the gates are applied
// exactly and no random numbers are drawn; with gate noise one stochastic
// trajectory is produced, deterministic in `seed`. Readout noise is ignored
// here (see sample_counts).
StateVector run_circuit(StateVector state, const Circuit& circuit, const NoiseModel& noise = {},
                        std::uint64_t seed = 0);

}  // namespace cvqe
