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

#include "cvqe/vqe/spsa.h"

#include <algorithm>
#include <cmath>
#include <exception>

#include "cvqe/rng.h"

namespace cvqe {

int SpsaConfig::total_iterations() const {
  int total = 0;
  for (const SpsaStage& s : stages) total += s.iterations;
  return total;
}

double SpsaConfig::stability_constant() const { return big_a ? *big_a : 0.1 * total_iterations(); }

void SpsaConfig::validate() const {
  if (stages.empty()) throw std::invalid_argument("SPSA schedule has no stages");
  for (const SpsaStage& s : stages) {
    if (s.iterations < 1) throw std::invalid_argument("SPSA stage needs at least one iteration");
    if (s.shots < 1) throw std::invalid_argument("SPSA stage needs at least one shot");
    if (s.gradient_estimates < 1) throw std::invalid_argument("SPSA stage needs at least one gradient estimate");
  }
  if (!(a > 0.0) || !(c > 0.0)) throw std::invalid_argument("SPSA gains a and c must be positive");
  if (big_a && !(*big_a >= 0.0)) throw std::invalid_argument("SPSA stability constant must be >= 0");
  if (!std::isfinite(alpha) || !std::isfinite(gamma)) throw std::invalid_argument("SPSA exponents must be finite");
}

SpsaConfig SpsaConfig::standard() {
  SpsaConfig c;
  c.stages = {{175, 10000, 1}};
  return c;
}

SpsaConfig SpsaConfig::three_stage() {
  SpsaConfig c;
  c.stages = {{250, 100, 1}, {50, 1000, 1}, {25, 10000, 2}};
  return c;
}

SpsaConfig SpsaConfig::named(const std::string& name) {
  if (name == "standard") return standard();
  if (name == "three-stage") return three_stage();
  throw std::invalid_argument("unknown SPSA schedule '" + name + "' (expected standard or three-stage)");
}

std::uint64_t circuit_evaluations(const SpsaConfig& config, int settings) {
  std::uint64_t total = 0;
  for (const SpsaStage& s : config.stages)
    total += static_cast<std::uint64_t>(s.iterations) * 2U * static_cast<std::uint64_t>(s.gradient_estimates) *
             static_cast<std::uint64_t>(settings) * s.shots;
  return total;
}

SpsaTrace spsa_minimize(const SpsaObjective& objective, std::span<const double> start, const SpsaConfig& config,
                        std::uint64_t seed) {
  config.validate();
  if (start.empty()) throw std::invalid_argument("spsa_minimize: empty parameter vector");
  const std::size_t dim = start.size();
  const double big_a = config.stability_constant();

  SpsaTrace trace;
  std::vector<double> p(start.begin(), start.end());
  std::vector<double> delta(dim), probe(dim), grad(dim);
  Rng perturb(derive_seed(seed, 0));

  auto evaluate = [&](int iteration, std::uint64_t shots) {
    const std::uint64_t call_seed = derive_seed(seed, 1 + trace.objective_calls);
    ++trace.objective_calls;
    trace.shots_requested += shots;
    try {
      return objective(probe, shots, call_seed);
    } catch (const std::exception& e) {
      throw OptimizerError(iteration, e.what());
    }
  };

  int k = 0;
  for (std::size_t stage = 0; stage < config.stages.size(); ++stage) {
    const SpsaStage& s = config.stages[stage];
    for (int it = 0; it < s.iterations; ++it, ++k) {
      const double ak = config.a / std::pow(k + 1 + big_a, config.alpha);
      const double ck = config.c / std::pow(k + 1, config.gamma);
      std::fill(grad.begin(), grad.end(), 0.0);
      double raw_sum = 0.0, corrected_sum = 0.0;
      for (int g = 0; g < s.gradient_estimates; ++g) {
        for (double& d : delta) d = (perturb.next_u64() >> 63) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < dim; ++i) probe[i] = p[i] + ck * delta[i];
        const ObjectiveValue plus = evaluate(k, s.shots);
        for (std::size_t i = 0; i < dim; ++i) probe[i] = p[i] - ck * delta[i];
        const ObjectiveValue minus = evaluate(k, s.shots);
        const double diff = (plus.corrected - minus.corrected) / (2.0 * ck);
        for (std::size_t i = 0; i < dim; ++i) grad[i] += diff / delta[i];
        raw_sum += plus.raw + minus.raw;
        corrected_sum += plus.corrected + minus.corrected;
      }
      for (std::size_t i = 0; i < dim; ++i) p[i] -= ak * grad[i] / s.gradient_estimates;
      const double points = 2.0 * s.gradient_estimates;
      trace.records.push_back({k, static_cast<int>(stage), p, raw_sum / points, corrected_sum / points});
    }
  }
  trace.final_params = p;
  return trace;
}

}  // namespace cvqe
