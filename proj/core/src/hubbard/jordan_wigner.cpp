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

#include "cvqe/hubbard/jordan_wigner.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "cvqe/errors.h"

namespace cvqe {
namespace {

void check_permutation(const std::vector<int>& p, int size, const char* what) {
  if (static_cast<int>(p.size()) != size) throw ValidationError(std::string(what) + ": wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (int v : p) {
    if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)])
      throw ValidationError(std::string(what) + ": not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

SiteOrdering SiteOrdering::natural(int n) {
  SiteOrdering s;
  s.position.resize(static_cast<std::size_t>(n));
  std::iota(s.position.begin(), s.position.end(), 0);
  return s;
}

void SiteOrdering::validate(int n) const { check_permutation(position, n, "SiteOrdering"); }

ModeOrdering ModeOrdering::natural(int n) { return blocked(SiteOrdering::natural(n)); }

ModeOrdering ModeOrdering::blocked(const SiteOrdering& sites) {
  const int n = static_cast<int>(sites.position.size());
  sites.validate(n);
  ModeOrdering m;
  m.qubit_of_mode.resize(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    m.qubit_of_mode[static_cast<std::size_t>(k)] = sites.position[static_cast<std::size_t>(k)];
    m.qubit_of_mode[static_cast<std::size_t>(n + k)] = n + sites.position[static_cast<std::size_t>(k)];
  }
  return m;
}

void ModeOrdering::validate(int n) const { check_permutation(qubit_of_mode, 2 * n, "ModeOrdering"); }

PauliSum jordan_wigner_hopping(int num_qubits, int qubit_a, int qubit_b) {
  if (qubit_a == qubit_b) throw ValidationError("jordan_wigner_hopping: modes must differ");
  const int lo = std::min(qubit_a, qubit_b), hi = std::max(qubit_a, qubit_b);
  if (lo < 0 || hi >= num_qubits) throw std::out_of_range("jordan_wigner_hopping: qubit out of range");
  std::string xx(static_cast<std::size_t>(num_qubits), 'I');
  for (int q = lo + 1; q < hi; ++q) xx[static_cast<std::size_t>(q)] = 'Z';
  std::string yy = xx;
  xx[static_cast<std::size_t>(lo)] = xx[static_cast<std::size_t>(hi)] = 'X';
  yy[static_cast<std::size_t>(lo)] = yy[static_cast<std::size_t>(hi)] = 'Y';
  PauliSum h(num_qubits);
  h.add(0.5, std::move(xx)).add(0.5, std::move(yy));
  return h;
}

PauliSum jordan_wigner_number(int num_qubits, int qubit) {
  if (qubit < 0 || qubit >= num_qubits) throw std::out_of_range("jordan_wigner_number: qubit out of range");
  std::string z(static_cast<std::size_t>(num_qubits), 'I');
  PauliSum h(num_qubits);
  h.add(0.5, z);
  z[static_cast<std::size_t>(qubit)] = 'Z';
  h.add(-0.5, std::move(z));
  return h;
}

PauliSum jordan_wigner_hamiltonian(const HubbardSpec& spec, const ModeOrdering& ordering) {
  spec.validate();
  const int n = spec.n();
  ordering.validate(n);
  const int q = 2 * n;
  PauliSum h(q);
  auto scaled = [&h](const PauliSum& part, double factor) {
    for (const PauliTerm& term : part.terms()) h.add(factor * term.coefficient, term.ops);
  };
  for (const Edge& e : spec.graph.edges) {
    scaled(jordan_wigner_hopping(q, ordering.up(e.i), ordering.up(e.j)), -spec.t);
    scaled(jordan_wigner_hopping(q, ordering.down(e.i), ordering.down(e.j)), -spec.t);
  }
  for (int k = 1; k <= n; ++k) {
    const int a = ordering.up(k), b = ordering.down(k);
    std::string ops(static_cast<std::size_t>(q), 'I');
    h.add(spec.u / 4, ops);
    ops[static_cast<std::size_t>(a)] = 'Z';
    h.add(-spec.u / 4, ops);
    ops[static_cast<std::size_t>(b)] = 'Z';
    h.add(spec.u / 4, ops);
    ops[static_cast<std::size_t>(a)] = 'I';
    h.add(-spec.u / 4, std::move(ops));

    if (const double w = spec.weight(k); w != 0.0) {
      scaled(jordan_wigner_number(q, a), w);
      scaled(jordan_wigner_number(q, b), w);
    }
  }
  return h.simplified();
}

PauliSum jordan_wigner_hamiltonian(const HubbardSpec& spec) {
  return jordan_wigner_hamiltonian(spec, ModeOrdering::natural(spec.n()));
}

CMatrix dense_hamiltonian(const PauliSum& h) {
  if (h.num_qubits() > kMaxDenseQubits)
    throw ResourceError("dense_hamiltonian: " + std::to_string(h.num_qubits()) + " qubits exceeds the dense limit");
  return to_dense(h);
}

}  // namespace cvqe
