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

#include "cvqe/compressed/subspace_hadamard.h"

#include <cmath>
#include <numbers>

#include "cvqe/compressed/compressed_hamiltonian.h"
#include "cvqe/errors.h"
#include "cvqe/rng.h"
#include "cvqe/sim/gate.h"
#include "cvqe/sim/sampling.h"

namespace cvqe {

StateVector prepare_subspace_hadamard(const StateVector& input, int n, const Matching& m, int target_register) {
  if (!is_matching(m)) throw ValidationError("subspace_hadamard: edges do not form a matching");
  const int p = register_qubits(n);
  const int in_qubits = input.num_qubits();
  if (in_qubits % p != 0) throw DimensionError("subspace_hadamard: state is not a whole number of registers");
  const int registers = in_qubits / p;
  if (target_register < 0 || target_register >= registers)
    throw std::out_of_range("subspace_hadamard: target register out of range");
  for (const Edge& e : m.edges)
    if (e.j > n) throw ValidationError("subspace_hadamard: matching references a site beyond n");

  const int shift = (registers - 1 - target_register) * p;
  const std::uint64_t reg_mask = (std::uint64_t{1} << p) - 1;
  auto target_value = [&](std::uint64_t in_index) { return (in_index >> shift) & reg_mask; };

  for (std::uint64_t i = 0; i < input.dimension(); ++i)
    if (std::norm(input[i]) > 1e-24 && target_value(i) >= static_cast<std::uint64_t>(n))
      throw ValidationError("subspace_hadamard: state has support outside sites 1..n");

  const std::vector<int> partner_site = m.partners(n);
  auto partner_of = [&](std::uint64_t v) -> std::uint64_t {
    return static_cast<std::uint64_t>(partner_site[static_cast<std::size_t>(v + 1)] - 1);
  };

  const int low = p + 1;  // partner register and ancilla
  std::vector<Complex> amps(input.dimension() << low);
  // Step 1: partner register <- pi(i). The appended qubits start at zero, so the
  // XOR reduces to a write.
  for (std::uint64_t i = 0; i < input.dimension(); ++i) {
    if (input[i] == Complex{}) continue;
    const std::uint64_t v = target_value(i);
    const std::uint64_t partner = v < static_cast<std::uint64_t>(n) ? partner_of(v) : v;
    amps[(i << low) | (partner << 1)] = input[i];
  }
  // Step 2: ancilla (|0> + (-1)^[partner < i] |1>)/sqrt2 where i is matched.
  const double r = std::numbers::sqrt2 / 2;
  for (std::uint64_t i = 0; i < input.dimension(); ++i) {
    const std::uint64_t v = target_value(i);
    if (v >= static_cast<std::uint64_t>(n)) continue;
    const std::uint64_t partner = partner_of(v);
    if (partner == v) continue;
    const std::uint64_t base = (i << low) | (partner << 1);
    const Complex a = amps[base];
    amps[base] = r * a;
    amps[base | 1] = (partner < v ? -r : r) * a;
  }
  StateVector out = StateVector::from_amplitudes(std::move(amps));

  // Steps 3-4: CSWAP(ancilla; target bit, partner bit), then H on the ancilla.
  const int ancilla = in_qubits + p;
  const int target_first = target_register * p;
  for (int b = 0; b < p; ++b) apply_gate(out, Gate::cswap(ancilla, target_first + b, in_qubits + b));
  apply_gate(out, Gate::h(ancilla));
  return out;
}

double acceptance_probability(const StateVector& prepared) {
  return 1.0 - probability_of_one(prepared, prepared.num_qubits() - 1);
}

SubspaceHadamardResult subspace_hadamard(const StateVector& input, int n, const Matching& m, std::uint64_t seed,
                                         int target_register) {
  StateVector state = prepare_subspace_hadamard(input, n, m, target_register);
  Rng rng(seed);
  const int outcome = measure_qubit(state, state.num_qubits() - 1, rng);
  return {std::move(state), outcome == 0};
}

}  // namespace cvqe
