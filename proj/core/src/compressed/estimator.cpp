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

#include "cvqe/compressed/estimator.h"

#include <stdexcept>

#include "cvqe/compressed/compressed_hamiltonian.h"
#include "cvqe/compressed/matching.h"
#include "cvqe/compressed/subspace_hadamard.h"
#include "cvqe/errors.h"
#include "cvqe/rng.h"
#include "cvqe/sim/sampling.h"

namespace cvqe {

CompressedEnergyReport estimate_compressed_energy(const StateVector& state, const HubbardSpec& spec,
                                                  std::uint64_t shots, std::uint64_t seed,
                                                  const ReadoutCalibration* calibration) {
  if (shots == 0) throw std::invalid_argument("estimate_compressed_energy: shots must be >= 1");
  spec.validate();
  const int n = spec.n();
  const int p = register_qubits(n);
  if (state.num_qubits() != 2 * p) throw DimensionError("estimate_compressed_energy: state must hold two registers");

  const RMatrix hop = compressed_hopping_matrix(spec.graph);
  const std::vector<Matching> matchings = matching_decomposition(spec.graph);
  const int settings = 1 + 2 * static_cast<int>(matchings.size());
  std::vector<std::uint64_t> budget(static_cast<std::size_t>(settings), shots / static_cast<std::uint64_t>(settings));
  for (std::uint64_t r = 0; r < shots % static_cast<std::uint64_t>(settings); ++r) ++budget[r];

  CompressedEnergyReport report;
  report.settings = settings;
  EnergyEstimate& e = report.energy;
  e.shots_used = shots;

  // Computational basis: onsite equality test, hop diagonal, weights.
  const std::uint64_t side = std::uint64_t{1} << p;
  if (budget[0] == 0) {
    e.reliable = false;
  } else {
    const ShotCounts counts = sample_counts(state, budget[0], {}, derive_seed(seed, 0));
    std::vector<double> dist = counts.frequencies();
    if (calibration) {
      try {
        dist = apply_readout_correction(counts, *calibration);
        e.corrected = true;
      } catch (const MitigationError&) {
      }
    }
    for (std::uint64_t idx = 0; idx < dist.size(); ++idx) {
      const std::uint64_t i = idx / side, j = idx % side;
      if (i >= static_cast<std::uint64_t>(n) || j >= static_cast<std::uint64_t>(n)) continue;
      if (i == j) e.onsite_component += dist[idx];
      e.hopping_component += (hop(i, i) + hop(j, j)) * dist[idx];
      e.local_component += (spec.weight(static_cast<int>(i) + 1) + spec.weight(static_cast<int>(j) + 1)) * dist[idx];
    }
  }

  // One subspace-Hadamard setting per (matching, register).
  int setting = 1;
  for (const Matching& m : matchings) {
    for (int reg = 0; reg < 2; ++reg, ++setting) {
      const std::uint64_t budget_here = budget[static_cast<std::size_t>(setting)];
      if (budget_here == 0) {
        e.reliable = false;
        continue;
      }
      const StateVector prepared = prepare_subspace_hadamard(state, n, m, reg);
      const int width = prepared.num_qubits();
      const ShotCounts counts = sample_counts(prepared, budget_here, {}, derive_seed(seed, static_cast<std::uint64_t>(setting)));
      const int target_shift = width - (reg + 1) * p;
      const auto dense = counts.dense();
      std::uint64_t accepted = 0;
      double sum = 0.0;
      for (std::uint64_t outcome = 0; outcome < dense.size(); ++outcome) {
        if (dense[outcome] == 0) continue;
        if (outcome & 1U) {
          report.rejected_shots += dense[outcome];
          continue;
        }
        const std::uint64_t target = (outcome >> target_shift) & (side - 1);
        const std::uint64_t partner = (outcome >> 1) & (side - 1);
        accepted += dense[outcome];
        sum += static_cast<double>(dense[outcome]) * matching_eigenvalue(target, partner);
      }
      report.accepted_shots += accepted;
      if (accepted == 0) {
        e.reliable = false;
        continue;
      }
      e.hopping_component += sum / static_cast<double>(accepted);
    }
  }

  e.value = -spec.t * e.hopping_component + spec.u * e.onsite_component + e.local_component;
  return report;
}

}  // namespace cvqe
