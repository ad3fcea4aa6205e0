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

#include "cvqe/vqe/landscape.h"

#include <cmath>
#include <stdexcept>

#include "cvqe/compressed/compressed_hamiltonian.h"
#include "cvqe/compressed/evolution.h"
#include "cvqe/compressed/matching.h"
#include "cvqe/hubbard/eigensolver.h"
#include "cvqe/hubbard/jordan_wigner.h"
#include "cvqe/sim/pauli.h"
#include "cvqe/vqe/energy.h"

namespace cvqe {
namespace {

void require_two_by_one(const HubbardSpec& spec, Representation rep) {
  if (rep == Representation::kUncompressed && !is_two_by_one(spec))
    throw std::invalid_argument("the uncompressed ansatz is defined for the 2x1 lattice only");
}

}  // namespace

StateVector ansatz_state(const AnsatzParams& params, Representation rep) {
  return run_circuit(StateVector(circuit_qubits(rep)), ansatz_circuit(params, rep));
}

std::vector<Complex> compressed_ansatz_amplitudes(const HubbardSpec& spec, const AnsatzParams& params) {
  spec.validate();
  const int n = spec.n();
  const RMatrix hop = compressed_hopping_matrix(spec.graph);
  CMatrix single(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) single(i, j) = -spec.t * hop(i, j);
    single(i, i) += spec.weight(i + 1);
  }
  std::vector<Complex> g = ground_state_dense(single).vector;
  // Remove the arbitrary eigenvector phase, then fix the overall sign.
  Complex pivot = 0.0;
  for (const Complex& c : g)
    if (std::abs(c) > std::abs(pivot)) pivot = c;
  const Complex phase = std::abs(pivot) > 0.0 ? std::conj(pivot) / std::abs(pivot) : Complex(1.0);
  double sum = 0.0;
  for (Complex& c : g) {
    c *= phase;
    sum += c.real();
  }
  if (sum < 0.0)
    for (Complex& c : g) c = -c;

  std::vector<Complex> amps(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) amps[static_cast<std::size_t>(i * n + j)] = g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];

  apply_onsite_evolution(amps, n, params.phi);
  for (const Matching& m : matching_decomposition(spec.graph))
    for (int reg = 0; reg < 2; ++reg) apply_matching_evolution(amps, n, reg, m, -params.theta / 2.0);
  return amps;
}

StateVector compressed_ansatz_state(const HubbardSpec& spec, const AnsatzParams& params) {
  return embed_two_registers(compressed_ansatz_amplitudes(spec, params), spec.n());
}

double exact_landscape(const AnsatzParams& params, const HubbardSpec& spec, Representation rep) {
  spec.validate();
  require_two_by_one(spec, rep);
  if (rep == Representation::kUncompressed)
    return expectation(ansatz_state(params, rep), jordan_wigner_hamiltonian(spec));
  const CompressedHamiltonian h = compressed_hamiltonian(spec);
  if (is_two_by_one(spec)) return expectation(ansatz_state(params, rep), h.register_operator());
  return expectation(compressed_ansatz_amplitudes(spec, params), h.dense());
}

double exact_double_occupancy(const AnsatzParams& params, const HubbardSpec& spec, Representation rep) {
  spec.validate();
  require_two_by_one(spec, rep);
  const int n = spec.n();
  if (rep == Representation::kCompressed && !is_two_by_one(spec)) {
    const auto amps = compressed_ansatz_amplitudes(spec, params);
    double acc = 0.0;
    for (int k = 0; k < n; ++k) acc += std::norm(amps[static_cast<std::size_t>(k * n + k)]);
    return acc / n;
  }
  const auto probs = ansatz_state(params, rep).probabilities();
  return double_occupancy_from_distribution(probs, n, rep);
}

}  // namespace cvqe
