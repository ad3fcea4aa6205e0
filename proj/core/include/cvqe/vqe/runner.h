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
#include <optional>
#include <string>
#include <string_view>

#include "cvqe/energy_estimate.h"
#include "cvqe/hubbard/lattice.h"
#include "cvqe/mitigation/readout.h"
#include "cvqe/sim/noise.h"
#include "cvqe/vqe/ansatz.h"
#include "cvqe/vqe/spsa.h"

namespace cvqe {

struct MitigationOptions {
  bool readout = false;
  bool postselect = false;  // uncompressed only; ignored for the compressed encoding
  std::uint64_t calibration_shots = 10000;

  bool any() const { return readout || postselect; }
};

// "none" | "readout" | "postselect" | "both".
MitigationOptions parse_mitigation(std::string_view text);
std::string to_string(const MitigationOptions& m);

// Builds a readout calibration on `qubits` qubits by preparing each basis state
// with X gates under `noise` and measuring it.
ReadoutCalibration calibrate_device(int qubits, const NoiseModel& noise, std::uint64_t shots_per_state,
                                    std::uint64_t seed);

struct PointMeasurement {
  EnergyEstimate raw;
  EnergyEstimate corrected;  // equal to raw when no mitigation applies
  double docc_raw = 0.0;
  double docc_corrected = 0.0;
  std::uint64_t discarded = 0;     // postselected shots, both settings
  bool mitigation_failed = false;  // a correction step fell back to raw data
};

// Shot-based energy of the ansatz at one parameter point.
//
// On 2x1 the onsite and hopping circuits are each sampled with `shots` shots
// under the noise model; postselection (uncompressed) runs on the raw counts
// before readout inversion. On larger lattices only the noiseless compressed
// estimator is available and each of its settings receives `shots` shots.
class EnergyMeasurer {
 public:
  EnergyMeasurer(HubbardSpec spec, Representation rep, NoiseModel noise, MitigationOptions mitigation,
                 std::optional<ReadoutCalibration> calibration = std::nullopt);

  PointMeasurement measure(const AnsatzParams& params, std::uint64_t shots, std::uint64_t seed) const;

  int measured_qubits() const;
  // Measurement settings per energy evaluation.
  int settings() const;
  const std::optional<ReadoutCalibration>& calibration() const { return calibration_; }

 private:
  HubbardSpec spec_;
  Representation rep_;
  NoiseModel noise_;
  MitigationOptions mitigation_;
  std::optional<ReadoutCalibration> calibration_;
};

struct VqeOptions {
  HubbardSpec spec;
  Representation rep = Representation::kCompressed;
  NoiseModel noise;
  MitigationOptions mitigation;
  SpsaConfig spsa = SpsaConfig::standard();
  AnsatzParams start{1.0, 1.0};
  std::uint64_t final_shots = 10000;

  // std::invalid_argument for unsupported combinations.
  void validate() const;
};

struct FinalEvaluation {
  AnsatzParams params;
  PointMeasurement measurement;
  double energy_exact_landscape = 0.0;  // noiseless energy of the ansatz at params
  std::optional<ReadoutCalibration> calibration;
};

// Fresh calibration (when readout mitigation is on), then both settings with
// `opts.final_shots` shots.
FinalEvaluation final_evaluation(const AnsatzParams& params, const VqeOptions& opts, std::uint64_t seed);

struct VqeRun {
  SpsaTrace trace;
  FinalEvaluation final;
  std::optional<ReadoutCalibration> initial_calibration;
};

// Calibrates once, optimizes the corrected energy with SPSA and finishes with
// final_evaluation. Sub-seeds: calibration derive_seed(seed, 1), SPSA 2, final 3.
VqeRun run_vqe(const VqeOptions& opts, std::uint64_t seed);

}  // namespace cvqe
