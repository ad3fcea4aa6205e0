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

#include "cvqe/vqe/energy.h"

#include <stdexcept>

namespace cvqe {
namespace {

bool bit(std::uint64_t outcome, int width, int qubit) { return (outcome >> (width - 1 - qubit)) & 1U; }

void check_width(std::span<const double> dist, Representation rep) {
  if (dist.size() != (std::size_t{1} << circuit_qubits(rep)))
    throw std::invalid_argument("distribution size does not match the " + to_string(rep) + " register");
}

// Summed double occupancy (not divided by n).
double onsite_sum(std::span<const double> onsite, int n, Representation rep) {
  check_width(onsite, rep);
  const int w = circuit_qubits(rep);
  double acc = 0.0;
  for (std::uint64_t o = 0; o < onsite.size(); ++o) {
    if (rep == Representation::kCompressed) {
      if (bit(o, w, 0) == bit(o, w, 1)) acc += onsite[o];
    } else {
      for (int k = 0; k < n; ++k)
        if (bit(o, w, k) && bit(o, w, n + k)) acc += onsite[o];
    }
  }
  return acc;
}

}  // namespace

bool is_two_by_one(const HubbardSpec& spec) { return spec.n() == 2 && spec.graph.edges.size() == 1; }

EnergyEstimate energy_from_distributions(std::span<const double> onsite, std::span<const double> hopping,
                                         const HubbardSpec& spec, Representation rep) {
  if (!is_two_by_one(spec)) throw std::invalid_argument("energy_from_distributions: gate circuits cover the 2x1 lattice only");
  check_width(onsite, rep);
  check_width(hopping, rep);
  const int w = circuit_qubits(rep);
  EnergyEstimate e;
  e.onsite_component = onsite_sum(onsite, 2, rep);
  for (std::uint64_t o = 0; o < hopping.size(); ++o) {
    if (rep == Representation::kCompressed) {
      const double z0 = bit(o, w, 0) ? -1.0 : 1.0, z1 = bit(o, w, 1) ? -1.0 : 1.0;
      e.hopping_component += (z0 + z1) * hopping[o];
    } else {
      const auto& table = uncompressed_hopping_table();
      const int up = 2 * bit(o, w, 0) + bit(o, w, 1);
      const int down = 2 * bit(o, w, 2) + bit(o, w, 3);
      e.hopping_component += (table[static_cast<std::size_t>(up)] + table[static_cast<std::size_t>(down)]) * hopping[o];
    }
  }
  for (std::uint64_t o = 0; o < onsite.size(); ++o) {
    double occupied_weight = 0.0;
    if (rep == Representation::kCompressed) {
      // Register value 0 is site 1.
      occupied_weight = spec.weight(bit(o, w, 0) ? 2 : 1) + spec.weight(bit(o, w, 1) ? 2 : 1);
    } else {
      for (int k = 0; k < 2; ++k)
        occupied_weight += spec.weight(k + 1) * (static_cast<int>(bit(o, w, k)) + static_cast<int>(bit(o, w, 2 + k)));
    }
    e.local_component += occupied_weight * onsite[o];
  }
  e.value = -spec.t * e.hopping_component + spec.u * e.onsite_component + e.local_component;
  return e;
}

EnergyEstimate energy_from_counts(const ShotCounts& onsite, const ShotCounts& hopping, const HubbardSpec& spec,
                                  Representation rep) {
  if (onsite.total() == 0 || hopping.total() == 0) throw std::invalid_argument("energy_from_counts: no shots");
  EnergyEstimate e = energy_from_distributions(onsite.frequencies(), hopping.frequencies(), spec, rep);
  e.shots_used = onsite.total() + hopping.total();
  return e;
}

double double_occupancy_from_distribution(std::span<const double> onsite, int n, Representation rep) {
  if (n < 1) throw std::invalid_argument("double occupancy: n must be >= 1");
  return onsite_sum(onsite, n, rep) / n;
}

double double_occupancy_from_counts(const ShotCounts& onsite, int n, Representation rep) {
  if (onsite.total() == 0) throw std::invalid_argument("double occupancy: no shots");
  return double_occupancy_from_distribution(onsite.frequencies(), n, rep);
}

}  // namespace cvqe
