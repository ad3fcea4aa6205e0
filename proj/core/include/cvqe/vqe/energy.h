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

#include <span>

#include "cvqe/energy_estimate.h"
#include "cvqe/hubbard/lattice.h"
#include "cvqe/sim/sampling.h"
#include "cvqe/vqe/ansatz.h"

namespace cvqe {

// True for the two-site, single-edge instance the gate circuits implement.
bool is_two_by_one(const HubbardSpec& spec);

// Energy of the 2x1 instance from outcome distributions of the onsite and
// hopping settings.
//   compressed:   -t (<Z_0> + <Z_1>)_hopping + U P(reg0 == reg1)_onsite
//   uncompressed: -t sum_spin (table average)_hopping + U sum_k P(k doubly occupied)_onsite
// Site weights are read from the onsite distribution. std::invalid_argument
// unless `spec` is 2x1 and the distribution sizes match the representation.
EnergyEstimate energy_from_distributions(std::span<const double> onsite, std::span<const double> hopping,
                                         const HubbardSpec& spec, Representation rep);

// Same from shot counts; std::invalid_argument if either histogram is empty.
EnergyEstimate energy_from_counts(const ShotCounts& onsite, const ShotCounts& hopping, const HubbardSpec& spec,
                                  Representation rep);

// (1/n) sum_k <n_k,up n_k,down> from onsite readouts. For the compressed
// encoding this is P(reg0 == reg1) / n.
double double_occupancy_from_distribution(std::span<const double> onsite, int n, Representation rep);
double double_occupancy_from_counts(const ShotCounts& onsite, int n, Representation rep);

}  // namespace cvqe
