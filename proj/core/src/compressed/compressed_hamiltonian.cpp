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

#include "cvqe/compressed/compressed_hamiltonian.h"

#include <cmath>
#include <stdexcept>

#include "cvqe/errors.h"
#include "cvqe/sim/pauli.h"

namespace cvqe {

int register_qubits(int n) {
  if (n < 1) throw std::invalid_argument("register_qubits: n must be >= 1");
  int p = 1;
  while ((1 << p) < n) ++p;
  return p;
}

RMatrix compressed_hopping_matrix(const Graph& graph, const SiteOrdering& ordering) {
  graph.validate();
  const int n = graph.n;
  ordering.validate(n);
  // |e_k> on n qubits: a single 1 at qubit position[k-1].
  auto basis_index = [&](int site) {
    return std::uint64_t{1} << (n - 1 - ordering.position[static_cast<std::size_t>(site - 1)]);
  };
  std::vector<std::uint64_t> index(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) index[static_cast<std::size_t>(k)] = basis_index(k);

  CMatrix acc(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const Edge& e : graph.edges) {
    const PauliSum term = jordan_wigner_hopping(n, ordering.position[static_cast<std::size_t>(e.i - 1)],
                                                ordering.position[static_cast<std::size_t>(e.j - 1)]);
    for (int l = 1; l <= n; ++l) {
      for (const PauliTerm& p : term.terms()) {
        const auto [phase, out] = apply_pauli_string(p.ops, index[static_cast<std::size_t>(l)]);
        for (int k = 1; k <= n; ++k)
          if (out == index[static_cast<std::size_t>(k)])
            acc(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1)) += p.coefficient * phase;
      }
    }
  }
  RMatrix hop(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < hop.rows(); ++r)
    for (std::size_t c = 0; c < hop.cols(); ++c) {
      if (std::abs(acc(r, c).imag()) > 1e-12) throw std::logic_error("compressed hopping matrix is not real");
      hop(r, c) = acc(r, c).real();
    }
  return hop;
}

RMatrix compressed_hopping_matrix(const Graph& graph) {
  return compressed_hopping_matrix(graph, SiteOrdering::natural(graph.n));
}

CompressedHamiltonian::CompressedHamiltonian(int n, RMatrix hop, double t, double u, std::vector<double> weights)
    : n_(n), hop_(std::move(hop)), t_(t), u_(u), weights_(std::move(weights)) {
  if (hop_.rows() != static_cast<std::size_t>(n) || hop_.cols() != static_cast<std::size_t>(n))
    throw DimensionError("CompressedHamiltonian: hop must be n x n");
  if (weights_.empty()) weights_.assign(static_cast<std::size_t>(n), 0.0);
  if (weights_.size() != static_cast<std::size_t>(n)) throw DimensionError("CompressedHamiltonian: one weight per site");
  for (std::size_t r = 0; r < hop_.rows(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (hop_(r, c) != hop_(c, r)) throw ValidationError("CompressedHamiltonian: hop is not symmetric");
}

CMatrix CompressedHamiltonian::dense() const {
  const std::size_t n = static_cast<std::size_t>(n_);
  CMatrix h(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        h(row, k * n + j) += -t_ * hop_(i, k);
        h(row, i * n + k) += -t_ * hop_(j, k);
      }
      if (i == j) h(row, row) += u_;
      h(row, row) += weights_[i] + weights_[j];
    }
  return h;
}

CMatrix CompressedHamiltonian::register_operator() const {
  const std::size_t n = static_cast<std::size_t>(n_);
  const std::size_t side = std::size_t{1} << register_qubits(n_);
  const CMatrix small = dense();
  CMatrix big(side * side, side * side);
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n * n; ++c)
      big((r / n) * side + r % n, (c / n) * side + c % n) = small(r, c);
  return big;
}

CMatrix CompressedHamiltonian::onsite_projector() const {
  const std::size_t n = static_cast<std::size_t>(n_);
  CMatrix p(n * n, n * n);
  for (std::size_t k = 0; k < n; ++k) p(k * n + k, k * n + k) = 1.0;
  return p;
}

CompressedHamiltonian compressed_hamiltonian(const HubbardSpec& spec, const SiteOrdering& ordering) {
  spec.validate();
  return CompressedHamiltonian(spec.n(), compressed_hopping_matrix(spec.graph, ordering), spec.t, spec.u,
                               spec.weights);
}

CompressedHamiltonian compressed_hamiltonian(const HubbardSpec& spec) {
  return compressed_hamiltonian(spec, SiteOrdering::natural(spec.n()));
}

StateVector embed_two_registers(std::span<const Complex> amplitudes, int n) {
  const std::size_t nn = static_cast<std::size_t>(n);
  if (amplitudes.size() != nn * nn) throw DimensionError("embed_two_registers: expected n^2 amplitudes");
  const int p = register_qubits(n);
  const std::size_t side = std::size_t{1} << p;
  std::vector<Complex> out(side * side);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) out[i * side + j] = amplitudes[i * nn + j];
  return StateVector::from_amplitudes(std::move(out));
}

std::vector<Complex> extract_two_registers(const StateVector& state, int n) {
  const int p = register_qubits(n);
  if (state.num_qubits() != 2 * p) throw DimensionError("extract_two_registers: expected 2p qubits");
  const std::size_t nn = static_cast<std::size_t>(n), side = std::size_t{1} << p;
  std::vector<Complex> out(nn * nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) out[i * nn + j] = state[i * side + j];
  return out;
}

}  // namespace cvqe
