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

#include "cvqe/sim/sampling.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvqe/errors.h"

namespace cvqe {
namespace {

std::vector<double> cumulative(std::span<const double> p) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  return cdf;
}

std::uint64_t draw(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform() * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
}

std::uint64_t flip_bits(std::uint64_t outcome, std::span<const ReadoutError> readout, int width, Rng& rng) {
  for (int q = 0; q < width; ++q) {
    const ReadoutError& r = readout[static_cast<std::size_t>(q)];
    if (r.trivial()) continue;
    const std::uint64_t m = std::uint64_t{1} << (width - 1 - q);
    const double p = (outcome & m) ? r.p10 : r.p01;
    if (rng.bernoulli(p)) outcome ^= m;
  }
  return outcome;
}

void check_readout(std::span<const ReadoutError> readout, int width) {
  if (!readout.empty() && static_cast<int>(readout.size()) != width)
    throw DimensionError("readout error list must have one entry per measured qubit");
}

}  // namespace

ShotCounts::ShotCounts(int num_bits) : num_bits_(num_bits) {
  if (num_bits < 1 || num_bits > kMaxQubits) throw std::invalid_argument("ShotCounts: bad width");
  counts_.assign(std::size_t{1} << num_bits, 0);
}

ShotCounts ShotCounts::from_map(int num_bits, const std::map<std::string, std::uint64_t>& counts) {
  ShotCounts out(num_bits);
  for (const auto& [bits, n] : counts) {
    if (static_cast<int>(bits.size()) != num_bits)
      throw std::invalid_argument("ShotCounts: outcome '" + bits + "' has the wrong length");
    out.add(from_bitstring(bits), n);
  }
  return out;
}

std::uint64_t ShotCounts::count(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != num_bits_) throw std::invalid_argument("ShotCounts: wrong outcome length");
  return counts_[from_bitstring(bits)];
}

void ShotCounts::add(std::uint64_t outcome, std::uint64_t n) {
  counts_.at(outcome) += n;
  total_ += n;
}

std::map<std::string, std::uint64_t> ShotCounts::to_map() const {
  std::map<std::string, std::uint64_t> out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] != 0) out.emplace(to_bitstring(i, num_bits_), counts_[i]);
  return out;
}

std::vector<double> ShotCounts::frequencies() const {
  if (total_ == 0) throw std::invalid_argument("ShotCounts: no shots recorded");
  std::vector<double> f(counts_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<double>(counts_[i]) / static_cast<double>(total_);
  return f;
}

ShotCounts sample_counts(const StateVector& state, std::uint64_t shots, std::span<const ReadoutError> readout,
                         std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample_counts: shots must be >= 1");
  const int width = state.num_qubits();
  check_readout(readout, width);
  const auto probs = state.probabilities();
  const auto cdf = cumulative(probs);
  Rng rng(seed);
  ShotCounts counts(width);
  for (std::uint64_t s = 0; s < shots; ++s) {
    std::uint64_t outcome = draw(cdf, rng);
    if (!readout.empty()) outcome = flip_bits(outcome, readout, width, rng);
    counts.add(outcome);
  }
  return counts;
}

ShotCounts sample_circuit(const StateVector& input, const Circuit& circuit, const NoiseModel& noise,
                          std::uint64_t shots, std::uint64_t seed) {
  noise.validate();
  const int width = circuit.num_qubits();
  const auto readout = noise.has_readout_noise() ? noise.readout_per_qubit(width) : std::vector<ReadoutError>{};
  if (!noise.has_gate_noise()) return sample_counts(run_circuit(input, circuit), shots, readout, seed);
  if (shots == 0) throw std::invalid_argument("sample_circuit: shots must be >= 1");
  if (input.num_qubits() != width) throw DimensionError("sample_circuit: circuit and state qubit counts differ");

  const auto clean_cdf = cumulative(run_circuit(input, circuit).probabilities());
  const auto& gates = circuit.gates();
  // Output distributions of faulty trajectories, keyed by (gate, Pauli code)
  // pairs. Single faults repeat often within one call.
  constexpr std::size_t kMaxCached = 1 << 14;
  std::map<std::vector<std::uint64_t>, std::vector<double>> cache;
  std::vector<std::uint64_t> faults;
  Rng rng(seed);
  ShotCounts counts(width);
  for (std::uint64_t s = 0; s < shots; ++s) {
    faults.clear();
    for (std::size_t g = 0; g < gates.size(); ++g) {
      const std::size_t k = gates[g].targets.size();
      if (rng.bernoulli(k == 1 ? noise.p1 : noise.p2)) {
        const std::uint64_t code = rng.below((std::uint64_t{1} << (2 * k)) - 1) + 1;
        faults.push_back((static_cast<std::uint64_t>(g) << 8) | code);
      }
    }
    std::uint64_t outcome;
    if (faults.empty()) {
      outcome = draw(clean_cdf, rng);
    } else if (auto hit = cache.find(faults); hit != cache.end()) {
      outcome = draw(hit->second, rng);
    } else {
      StateVector state = input;
      std::size_t next = 0;
      for (std::size_t g = 0; g < gates.size(); ++g) {
        apply_gate(state, gates[g]);
        while (next < faults.size() && (faults[next] >> 8) == g) {
          std::uint64_t code = faults[next] & 0xFFU;
          for (int q : gates[g].targets) {
            switch (code & 3U) {
              case 1: apply_gate(state, Gate::x(q)); break;
              case 2: apply_gate(state, Gate::y(q)); break;
              case 3: apply_gate(state, Gate::z(q)); break;
              default: break;
            }
            code >>= 2;
          }
          ++next;
        }
      }
      auto cdf = cumulative(state.probabilities());
      outcome = draw(cdf, rng);
      if (cache.size() < kMaxCached) cache.emplace(faults, std::move(cdf));
    }
    if (!readout.empty()) outcome = flip_bits(outcome, readout, width, rng);
    counts.add(outcome);
  }
  return counts;
}

std::vector<double> apply_readout_channel(std::span<const double> probabilities, int num_bits,
                                          std::span<const ReadoutError> readout) {
  if (probabilities.size() != (std::size_t{1} << num_bits)) throw DimensionError("apply_readout_channel: size mismatch");
  check_readout(readout, num_bits);
  std::vector<double> p(probabilities.begin(), probabilities.end());
  for (int q = 0; q < static_cast<int>(readout.size()); ++q) {
    const ReadoutError& r = readout[static_cast<std::size_t>(q)];
    const std::uint64_t m = std::uint64_t{1} << (num_bits - 1 - q);
    for (std::uint64_t i = 0; i < p.size(); ++i) {
      if (i & m) continue;
      const double zero = p[i], one = p[i | m];
      p[i] = (1.0 - r.p01) * zero + r.p10 * one;
      p[i | m] = r.p01 * zero + (1.0 - r.p10) * one;
    }
  }
  return p;
}

double probability_of_one(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) throw std::out_of_range("probability_of_one: qubit out of range");
  const auto m = state.mask(qubit);
  double p = 0.0;
  for (std::uint64_t i = 0; i < state.dimension(); ++i)
    if (i & m) p += std::norm(state[i]);
  return p;
}

int measure_qubit(StateVector& state, int qubit, Rng& rng) {
  const double p1 = probability_of_one(state, qubit);
  const int outcome = rng.uniform() < p1 ? 1 : 0;
  const auto m = state.mask(qubit);
  for (std::uint64_t i = 0; i < state.dimension(); ++i)
    if (static_cast<bool>(i & m) != static_cast<bool>(outcome)) state[i] = 0.0;
  state.normalize();
  return outcome;
}

}  // namespace cvqe
