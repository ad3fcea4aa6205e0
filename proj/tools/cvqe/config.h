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
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvqe/hubbard/lattice.h"
#include "cvqe/sim/noise.h"
#include "cvqe/vqe/runner.h"
#include "cvqe/vqe/spsa.h"

namespace cvqe::cli {

// Bad flags, config keys or values. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a subcommand needs, after flags and the config file are merged.
struct RunConfig {
  std::string lattice = "2x1";  // preset name or edge-list path
  double t = 1.0;
  double u = 2.0;
  std::optional<std::string> u_range;  // "start:stop:step", inclusive
  std::string rep = "compressed";
  std::string noise = "none";  // "none", "default" or a file path
  std::string spsa = "standard";
  std::optional<double> spsa_a, spsa_c, spsa_big_a, spsa_alpha, spsa_gamma;
  int seeds = 0;  // number of independent runs; 0 picks the command default
  std::uint64_t seed = 1;
  std::uint64_t shots = 10000;
  std::uint64_t calibration_shots = 10000;
  std::uint64_t final_shots = 10000;
  std::string mitigate = "none";
  double start_phi = 1.0;
  double start_theta = 1.0;
  int qubits = 0;  // calibrate only; 0 means the representation's width
  std::string out;
};

// Flat "key = value" document; '#' starts a comment. Keys match the long flag
// names with '-' spelled '_'. Returns the raw entries; ConfigError on syntax
// errors, duplicates or unknown keys.
std::map<std::string, std::string> read_config_entries(std::istream& in);

// Applies one entry to `cfg`. ConfigError for unknown keys or bad values.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

const std::vector<std::string>& config_keys();

// "p1", "p2", "readout_p01", "readout_p10" as key = value lines. The readout
// values may be a single number or a comma-separated per-qubit list.
NoiseModel parse_noise(std::istream& in);
NoiseModel default_noise();
NoiseModel resolve_noise(const std::string& spec);

HubbardSpec resolve_spec(const RunConfig& cfg, double u);
SpsaConfig resolve_spsa(const RunConfig& cfg);
Representation resolve_rep(const RunConfig& cfg);
MitigationOptions resolve_mitigation(const RunConfig& cfg);

// Inclusive grid start, start + step, ... up to stop (with a 1e-9 step slack).
std::vector<double> parse_range(const std::string& text);

}  // namespace cvqe::cli
