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
#include <vector>

#include "cvqe/energy_estimate.h"
#include "cvqe/hubbard/lattice.h"
#include "cvqe/mitigation/readout.h"
#include "cvqe/sim/state_vector.h"

namespace cvqe {

struct CompressedEnergyReport {
  EnergyEstimate energy;
  int settings = 0;
  std::uint64_t accepted_shots = 0;  // summed over the subspace-Hadamard settings
  std::uint64_t rejected_shots = 0;
};

// Shot-based energy of a two-register compressed state (2p qubits).
//
// `shots` is split evenly across 1 + 2|matchings| settings (remainder to the
// earliest): one computational-basis setting estimating U * P(reg1 == reg2),
// the hop diagonal and the weights, and for every matching and register a
// subspace-Hadamard setting estimating <H_M> on that register from the accepted
// shots. Settings left without shots or without accepted shots contribute 0
// and mark the estimate unreliable.
//
// If `calibration` is given (q = 2p) the computational-basis distribution is
// readout-corrected; on MitigationError the raw distribution is used and
// `corrected` stays false.
CompressedEnergyReport estimate_compressed_energy(const StateVector& state, const HubbardSpec& spec,
                                                  std::uint64_t shots, std::uint64_t seed,
                                                  const ReadoutCalibration* calibration = nullptr);

}  // namespace cvqe
