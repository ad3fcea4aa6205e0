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

#include "cvqe/vqe/runner.h"

#include <stdexcept>
#include <utility>

#include "cvqe/compressed/compressed_hamiltonian.h"
#include "cvqe/compressed/estimator.h"
#include "cvqe/compressed/matching.h"
#include "cvqe/errors.h"
#include "cvqe/mitigation/postselect.h"
#include "cvqe/rng.h"
#include "cvqe/sim/sampling.h"
#include "cvqe/vqe/energy.h"
#include "cvqe/vqe/landscape.h"

namespace cvqe {

MitigationOptions parse_mitigation(std::string_view text) {
  MitigationOptions m;
  if (text == "none") return m;
  if (text == "readout") {
    m.readout = true;
  } else if (text == "postselect") {
    m.postselect = true;
  } else if (text == "both") {
    m.readout = m.postselect = true;
  } else {
    throw std::invalid_argument("unknown mitigation '" + std::string(text) + "' (expected none, readout, postselect or both)");
  }
  return m;
}

std::string to_string(const MitigationOptions& m) {
  if (m.readout && m.postselect) return "both";
  if (m.readout) return "readout";
  if (m.postselect) return "postselect";
  return "none";
}

ReadoutCalibration calibrate_device(int qubits, const NoiseModel& noise, std::uint64_t shots_per_state,
                                    std::uint64_t seed) {
  auto sampler = [&](std::uint64_t basis_state, std::uint64_t shots, std::uint64_t s) {
    Circuit prep(qubits);
    for (int q = 0; q < qubits; ++q)
      if ((basis_state >> (qubits - 1 - q)) & 1U) prep.add(Gate::x(q));
    return sample_circuit(StateVector(qubits), prep, noise, shots, s);
  };
  return calibrate_readout(sampler, qubits, shots_per_state, seed);
}

EnergyMeasurer::EnergyMeasurer(HubbardSpec spec, Representation rep, NoiseModel noise, MitigationOptions mitigation,
                               std::optional<ReadoutCalibration> calibration)
    : spec_(std::move(spec)),
      rep_(rep),
      noise_(std::move(noise)),
      mitigation_(mitigation),
      calibration_(std::move(calibration)) {
  spec_.validate();
  noise_.validate();
  if (calibration_ && calibration_->q != measured_qubits())
    throw DimensionError("EnergyMeasurer: calibration covers the wrong number of qubits");
}

int EnergyMeasurer::measured_qubits() const {
  return is_two_by_one(spec_) ? circuit_qubits(rep_) : 2 * register_qubits(spec_.n());
}

int EnergyMeasurer::settings() const {
  if (is_two_by_one(spec_)) return 2;
  return 1 + 2 * static_cast<int>(matching_decomposition(spec_.graph).size());
}

PointMeasurement EnergyMeasurer::measure(const AnsatzParams& params, std::uint64_t shots, std::uint64_t seed) const {
  PointMeasurement out;
  const int n = spec_.n();
  if (!is_two_by_one(spec_)) {
    const StateVector state = compressed_ansatz_state(spec_, params);
    const auto settings_here = static_cast<std::uint64_t>(settings());
    const ReadoutCalibration* cal = mitigation_.readout && calibration_ ? &*calibration_ : nullptr;
    const CompressedEnergyReport raw = estimate_compressed_energy(state, spec_, shots * settings_here, seed);
    out.raw = raw.energy;
    out.docc_raw = raw.energy.onsite_component / n;
    if (cal) {
      const CompressedEnergyReport corr = estimate_compressed_energy(state, spec_, shots * settings_here, seed, cal);
      out.corrected = corr.energy;
      out.mitigation_failed = !corr.energy.corrected;
    } else {
      out.corrected = out.raw;
    }
    out.docc_corrected = out.corrected.onsite_component / n;
    return out;
  }

  const StateVector zero(circuit_qubits(rep_));
  const ShotCounts onsite = sample_circuit(zero, measurement_circuit(params, MeasurementKind::kOnsite, rep_), noise_,
                                           shots, derive_seed(seed, 0));
  const ShotCounts hopping = sample_circuit(zero, measurement_circuit(params, MeasurementKind::kHopping, rep_),
                                            noise_, shots, derive_seed(seed, 1));
  out.raw = energy_from_counts(onsite, hopping, spec_, rep_);
  out.docc_raw = double_occupancy_from_counts(onsite, n, rep_);

  const bool postselect = mitigation_.postselect && rep_ == Representation::kUncompressed;
  const bool readout = mitigation_.readout && calibration_.has_value();
  if (!postselect && !readout) {
    out.corrected = out.raw;
    out.docc_corrected = out.docc_raw;
    return out;
  }

  const ShotCounts* on = &onsite;
  const ShotCounts* hop = &hopping;
  PostselectResult kept_on{ShotCounts(onsite.num_bits()), 0}, kept_hop{ShotCounts(hopping.num_bits()), 0};
  if (postselect) {
    const OccupationFilter filter = OccupationFilter::one_up_one_down(n);
    kept_on = postselect_occupation(onsite, filter);
    kept_hop = postselect_occupation(hopping, filter);
    out.discarded = kept_on.discarded + kept_hop.discarded;
    if (kept_on.kept.total() == 0 || kept_hop.kept.total() == 0) {
      out.mitigation_failed = true;
    } else {
      on = &kept_on.kept;
      hop = &kept_hop.kept;
    }
  }
  std::vector<double> p_on = on->frequencies(), p_hop = hop->frequencies();
  if (readout) {
    try {
      p_on = apply_readout_correction(*on, *calibration_);
      p_hop = apply_readout_correction(*hop, *calibration_);
    } catch (const MitigationError&) {
      out.mitigation_failed = true;
      p_on = on->frequencies();
      p_hop = hop->frequencies();
    }
  }
  out.corrected = energy_from_distributions(p_on, p_hop, spec_, rep_);
  out.corrected.shots_used = on->total() + hop->total();
  out.corrected.corrected = !out.mitigation_failed;
  out.docc_corrected = double_occupancy_from_distribution(p_on, n, rep_);
  return out;
}

void VqeOptions::validate() const {
  spec.validate();
  noise.validate();
  spsa.validate();
  if (final_shots < 1) throw std::invalid_argument("final_shots must be >= 1");
  if (!is_two_by_one(spec)) {
    if (rep != Representation::kCompressed)
      throw std::invalid_argument("lattices other than 2x1 support the compressed representation only");
    if (noise.has_gate_noise() || noise.has_readout_noise())
      throw std::invalid_argument("lattices other than 2x1 are simulated without noise");
  }
}

namespace {

std::optional<ReadoutCalibration> maybe_calibrate(const VqeOptions& opts, int qubits, std::uint64_t seed) {
  if (!opts.mitigation.readout) return std::nullopt;
  return calibrate_device(qubits, opts.noise, opts.mitigation.calibration_shots, seed);
}

int measured_qubits(const VqeOptions& opts) {
  return is_two_by_one(opts.spec) ? circuit_qubits(opts.rep) : 2 * register_qubits(opts.spec.n());
}

}  // namespace

FinalEvaluation final_evaluation(const AnsatzParams& params, const VqeOptions& opts, std::uint64_t seed) {
  opts.validate();
  FinalEvaluation f;
  f.params = params;
  f.calibration = maybe_calibrate(opts, measured_qubits(opts), derive_seed(seed, 0));
  const EnergyMeasurer measurer(opts.spec, opts.rep, opts.noise, opts.mitigation, f.calibration);
  f.measurement = measurer.measure(params, opts.final_shots, derive_seed(seed, 1));
  f.energy_exact_landscape = exact_landscape(params, opts.spec, opts.rep);
  return f;
}

VqeRun run_vqe(const VqeOptions& opts, std::uint64_t seed) {
  opts.validate();
  VqeRun run;
  run.initial_calibration = maybe_calibrate(opts, measured_qubits(opts), derive_seed(seed, 1));
  const EnergyMeasurer measurer(opts.spec, opts.rep, opts.noise, opts.mitigation, run.initial_calibration);
  const SpsaObjective objective = [&](std::span<const double> p, std::uint64_t shots, std::uint64_t s) {
    const PointMeasurement m = measurer.measure({p[0], p[1]}, shots, s);
    return ObjectiveValue{m.raw.value, m.corrected.value};
  };
  const double start[2] = {opts.start.phi, opts.start.theta};
  run.trace = spsa_minimize(objective, start, opts.spsa, derive_seed(seed, 2));
  run.final = final_evaluation({run.trace.final_params[0], run.trace.final_params[1]}, opts, derive_seed(seed, 3));
  return run;
}

}  // namespace cvqe
