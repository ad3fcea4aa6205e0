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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvqe {

struct SpsaStage {
  int iterations = 0;
  std::uint64_t shots = 0;  // per energy evaluation
  int gradient_estimates = 1;
};

// Gains a_k = a / (k + 1 + A)^alpha and c_k = c / (k + 1)^gamma with k the
// global iteration index across stages. A defaults to 10% of the total
// iteration count.
struct SpsaConfig {
  std::vector<SpsaStage> stages;
  double a = 0.15;
  double c = 0.2;
  std::optional<double> big_a;
  double alpha = 0.602;
  double gamma = 0.101;

  int total_iterations() const;
  double stability_constant() const;
  // std::invalid_argument on empty schedules, non-positive counts or gains.
  void validate() const;

  // 175 iterations at 10^4 shots.
  static SpsaConfig standard();
  // (250, 100, 1), (50, 1000, 1), (25, 10^4, 2).
  static SpsaConfig three_stage();
  // "standard" | "three-stage"; std::invalid_argument otherwise.
  static SpsaConfig named(const std::string& name);
};

// Circuit evaluations of a schedule: every perturbed point of every gradient
// estimate is measured in `settings` bases at the stage's shot count.
std::uint64_t circuit_evaluations(const SpsaConfig& config, int settings = 2);

struct ObjectiveValue {
  double raw = 0.0;
  double corrected = 0.0;
};

// Noisy energy at `params` using `shots` per measurement setting; `seed`
// identifies the evaluation.
using SpsaObjective = std::function<ObjectiveValue(std::span<const double> params, std::uint64_t shots, std::uint64_t seed)>;

struct SpsaRecord {
  int iteration = 0;
  int stage = 0;
  std::vector<double> params;  // after the update
  double energy_raw = 0.0;     // mean over the iteration's perturbed evaluations
  double energy_corrected = 0.0;
};

struct SpsaTrace {
  std::vector<SpsaRecord> records;
  std::vector<double> final_params;
  std::uint64_t objective_calls = 0;
  std::uint64_t shots_requested = 0;  // summed shots argument over calls
};

// Raised when the objective throws; carries the failing iteration.
class OptimizerError : public std::runtime_error {
 public:
  OptimizerError(int iteration, const std::string& what)
      : std::runtime_error("iteration " + std::to_string(iteration) + ": " + what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

// Minimizes the corrected objective. Perturbations are drawn from a stream
// seeded with derive_seed(seed, 0); evaluation i receives derive_seed(seed, 1 + i).
SpsaTrace spsa_minimize(const SpsaObjective& objective, std::span<const double> start, const SpsaConfig& config,
                        std::uint64_t seed);

}  // namespace cvqe
