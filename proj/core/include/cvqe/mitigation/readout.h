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
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "cvqe/sim/matrix.h"
#include "cvqe/sim/noise.h"
#include "cvqe/sim/sampling.h"

namespace cvqe {

// Empirical confusion matrix over q measured qubits. Column s is the observed
// outcome distribution when basis state s was prepared, so for a true
// distribution p the observed one is matrix * p.
struct ReadoutCalibration {
  int q = 0;
  RMatrix matrix;
  std::uint64_t shots_per_state = 0;

  // Columns sum to 1 within 1e-12, entries >= 0.
  void validate() const;
};

// Prepares computational basis state `basis_state` and measures it `shots`
// times.
using BasisStateSampler = std::function<ShotCounts(std::uint64_t basis_state, std::uint64_t shots, std::uint64_t seed)>;

// Builds the confusion matrix column by column; basis state s is sampled with
// seed derive_seed(seed, s).
ReadoutCalibration calibrate_readout(const BasisStateSampler& sampler, int q, std::uint64_t shots_per_state,
                                     std::uint64_t seed);

// Exact confusion matrix of independent per-qubit flips (the tensor product of
// the 2x2 single-qubit matrices).
ReadoutCalibration exact_readout_calibration(std::span<const ReadoutError> readout);

// Calibration is rejected when its 1-norm condition number exceeds this.
inline constexpr double kMaxCalibrationCondition = 1e8;

// Solves matrix * p = p_observed, clips negative entries to 0 and renormalizes.
// MitigationError if the calibration is singular or ill-conditioned; callers
// are expected to fall back to the raw distribution.
std::vector<double> apply_readout_correction(std::span<const double> observed, const ReadoutCalibration& cal);
std::vector<double> apply_readout_correction(const ShotCounts& counts, const ReadoutCalibration& cal);

// Text form: "q <q>", "shots_per_state <n>", then 2^q rows of 2^q numbers.
void write_calibration(std::ostream& out, const ReadoutCalibration& cal);
ReadoutCalibration read_calibration(std::istream& in);

}  // namespace cvqe
