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

#include <benchmark/benchmark.h>

#include <numbers>

#include "cvqe/compressed/compressed_hamiltonian.h"
#include "cvqe/compressed/estimator.h"
#include "cvqe/compressed/matching.h"
#include "cvqe/compressed/subspace_hadamard.h"
#include "cvqe/hubbard/eigensolver.h"
#include "cvqe/hubbard/jordan_wigner.h"
#include "cvqe/rng.h"
#include "cvqe/sim/gate.h"
#include "cvqe/sim/sampling.h"
#include "cvqe/vqe/ansatz.h"
#include "cvqe/vqe/landscape.h"
#include "cvqe/vqe/runner.h"

namespace cvqe {
namespace {

void BM_ApplyRotation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  for (int q = 0; q < n; ++q) apply_gate(s, Gate::h(q));
  int q = 0;
  for (auto _ : state) {
    apply_gate(s, Gate::rx(q, 0.3));
    q = (q + 1) % n;
    benchmark::DoNotOptimize(s[0]);
  }
}
BENCHMARK(BM_ApplyRotation)->Arg(4)->Arg(10)->Arg(16);

void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  for (int q = 0; q < n; ++q) apply_gate(s, Gate::h(q));
  for (auto _ : state) {
    apply_gate(s, Gate::cnot(0, n - 1));
    benchmark::DoNotOptimize(s[0]);
  }
}
BENCHMARK(BM_ApplyCnot)->Arg(4)->Arg(10)->Arg(16);

void BM_SampleCounts(benchmark::State& state) {
  const StateVector s = ansatz_state({0.46, 0.78}, Representation::kUncompressed);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_counts(s, static_cast<std::uint64_t>(state.range(0)), {}, ++seed));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleCounts)->Arg(10000)->Arg(1000000);

void BM_SampleNoisyCircuit(benchmark::State& state) {
  const Representation rep = state.range(0) ? Representation::kUncompressed : Representation::kCompressed;
  const Circuit c = measurement_circuit({0.46, 0.78}, MeasurementKind::kHopping, rep);
  NoiseModel noise;
  noise.p1 = 0.001;
  noise.p2 = 0.04;
  noise.readout = {{0.02, 0.05}};
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_circuit(StateVector(circuit_qubits(rep)), c, noise, 10000, ++seed));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_SampleNoisyCircuit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SectorGroundState(benchmark::State& state) {
  const HubbardSpec spec{lattice_preset(state.range(0) == 4 ? "grid:2x2" : "line:3"), 1.0, 4.0, {}};
  const CMatrix h = compressed_hamiltonian(spec).dense();
  for (auto _ : state) benchmark::DoNotOptimize(ground_state_dense(h).energy);
}
BENCHMARK(BM_SectorGroundState)->Arg(3)->Arg(4);

void BM_JordanWignerDense(benchmark::State& state) {
  const HubbardSpec spec{lattice_preset("grid:2x2"), 1.0, 4.0, {}};
  for (auto _ : state) benchmark::DoNotOptimize(dense_hamiltonian(jordan_wigner_hamiltonian(spec)));
}
BENCHMARK(BM_JordanWignerDense)->Unit(benchmark::kMillisecond);

void BM_SubspaceHadamard(benchmark::State& state) {
  const HubbardSpec spec{lattice_preset("grid:2x2"), 1.0, 4.0, {}};
  const StateVector s = compressed_ansatz_state(spec, {0.4, 0.7});
  const Matching m = matching_decomposition(spec.graph).front();
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(subspace_hadamard(s, spec.n(), m, ++seed).accepted);
}
BENCHMARK(BM_SubspaceHadamard);

void BM_CompressedEstimator(benchmark::State& state) {
  const HubbardSpec spec{lattice_preset("grid:2x2"), 1.0, 4.0, {}};
  const StateVector s = compressed_ansatz_state(spec, {0.4, 0.7});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_compressed_energy(s, spec, 10000, ++seed).energy.value);
}
BENCHMARK(BM_CompressedEstimator)->Unit(benchmark::kMillisecond);

void BM_NoiselessVqeRun(benchmark::State& state) {
  VqeOptions opts;
  opts.spec = {lattice_preset("2x1"), 1.0, 2.0, {}};
  opts.spsa = state.range(0) ? SpsaConfig::three_stage() : SpsaConfig::standard();
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_vqe(opts, ++seed).final.energy_exact_landscape);
}
BENCHMARK(BM_NoiselessVqeRun)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cvqe

BENCHMARK_MAIN();
