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

#include "cvqe/sim/noise.h"

#include <algorithm>

#include "cvqe/errors.h"
#include "cvqe/rng.h"

namespace cvqe {
namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

void apply_pauli(StateVector& state, int qubit, unsigned pauli) {
  switch (pauli) {
    case 1: apply_gate(state, Gate::x(qubit)); break;
    case 2: apply_gate(state, Gate::y(qubit)); break;
    case 3: apply_gate(state, Gate::z(qubit)); break;
    default: break;
  }
}

// Inserts a uniformly random non-identity Pauli string on `targets`.
void insert_pauli(StateVector& state, const std::vector<int>& targets, Rng& rng) {
  const std::uint64_t strings = (std::uint64_t{1} << (2 * targets.size())) - 1;
  std::uint64_t code = rng.below(strings) + 1;
  for (int q : targets) {
    apply_pauli(state, q, static_cast<unsigned>(code & 3U));
    code >>= 2;
  }
}

}  // namespace

bool NoiseModel::has_readout_noise() const {
  return std::any_of(readout.begin(), readout.end(), [](const ReadoutError& r) { return !r.trivial(); });
}

ReadoutError NoiseModel::readout_for(int qubit) const {
  if (readout.empty()) return {};
  if (readout.size() == 1) return readout.front();
  if (qubit < 0 || static_cast<std::size_t>(qubit) >= readout.size())
    throw std::out_of_range("NoiseModel: no readout entry for qubit");
  return readout[static_cast<std::size_t>(qubit)];
}

std::vector<ReadoutError> NoiseModel::readout_per_qubit(int num_qubits) const {
  std::vector<ReadoutError> out;
  out.reserve(static_cast<std::size_t>(num_qubits));
  for (int q = 0; q < num_qubits; ++q) out.push_back(readout_for(q));
  return out;
}

void NoiseModel::validate() const {
  if (!is_probability(p1) || !is_probability(p2)) throw ValidationError("NoiseModel: gate error outside [0, 1]");
  for (const ReadoutError& r : readout)
    if (!is_probability(r.p01) || !is_probability(r.p10))
      throw ValidationError("NoiseModel: readout error outside [0, 1]");
}

StateVector run_circuit(StateVector state, const Circuit& circuit, const NoiseModel& noise, std::uint64_t seed) {
  if (circuit.num_qubits() != state.num_qubits())
    throw DimensionError("run_circuit: circuit and state qubit counts differ");
  noise.validate();
  if (!noise.has_gate_noise()) {
    for (const Gate& g : circuit.gates()) apply_gate(state, g);
    return state;
  }
  Rng rng(seed);
  for (const Gate& g : circuit.gates()) {
    apply_gate(state, g);
    const double p = g.targets.size() == 1 ? noise.p1 : noise.p2;
    if (rng.bernoulli(p)) insert_pauli(state, g.targets, rng);
  }
  return state;
}

}  // namespace cvqe
