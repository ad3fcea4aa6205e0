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

#include "config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cvqe/errors.h"

namespace cvqe::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  return out;
}

std::uint64_t to_count(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(key + ": expected an integer, got '" + v + "'");
  return out;
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "lattice",    "t",          "u",          "u_range",     "rep",          "noise",
      "spsa",       "spsa_a",     "spsa_c",     "spsa_big_a",  "spsa_alpha",   "spsa_gamma",
      "seeds",      "seed",       "shots",      "calibration_shots", "final_shots", "mitigate",
      "start_phi",  "start_theta", "qubits",    "out"};
  return keys;
}

std::map<std::string, std::string> read_config_entries(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(config_keys().begin(), config_keys().end(), key) == config_keys().end())
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!entries.emplace(key, value).second)
      throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return entries;
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "lattice") cfg.lattice = value;
  else if (key == "t") cfg.t = to_double(key, value);
  else if (key == "u") cfg.u = to_double(key, value);
  else if (key == "u_range") cfg.u_range = value;
  else if (key == "rep") cfg.rep = value;
  else if (key == "noise") cfg.noise = value;
  else if (key == "spsa") cfg.spsa = value;
  else if (key == "spsa_a") cfg.spsa_a = to_double(key, value);
  else if (key == "spsa_c") cfg.spsa_c = to_double(key, value);
  else if (key == "spsa_big_a") cfg.spsa_big_a = to_double(key, value);
  else if (key == "spsa_alpha") cfg.spsa_alpha = to_double(key, value);
  else if (key == "spsa_gamma") cfg.spsa_gamma = to_double(key, value);
  else if (key == "seeds") cfg.seeds = static_cast<int>(to_count(key, value));
  else if (key == "seed") cfg.seed = to_count(key, value);
  else if (key == "shots") cfg.shots = to_count(key, value);
  else if (key == "calibration_shots") cfg.calibration_shots = to_count(key, value);
  else if (key == "final_shots") cfg.final_shots = to_count(key, value);
  else if (key == "mitigate") cfg.mitigate = value;
  else if (key == "start_phi") cfg.start_phi = to_double(key, value);
  else if (key == "start_theta") cfg.start_theta = to_double(key, value);
  else if (key == "qubits") cfg.qubits = static_cast<int>(to_count(key, value));
  else if (key == "out") cfg.out = value;
  else throw ConfigError("unknown config key '" + key + "'");
}

NoiseModel parse_noise(std::istream& in) {
  NoiseModel m;
  std::vector<double> p01, p10;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("noise line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "p1") m.p1 = to_double(key, value);
    else if (key == "p2") m.p2 = to_double(key, value);
    else if (key == "readout_p01") p01 = to_list(key, value);
    else if (key == "readout_p10") p10 = to_list(key, value);
    else throw ConfigError("noise line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (!p01.empty() || !p10.empty()) {
    if (p01.empty()) p01.assign(p10.size(), 0.0);
    if (p10.empty()) p10.assign(p01.size(), 0.0);
    if (p01.size() == 1 && p10.size() > 1) p01.assign(p10.size(), p01[0]);
    if (p10.size() == 1 && p01.size() > 1) p10.assign(p01.size(), p10[0]);
    if (p01.size() != p10.size()) throw ConfigError("readout_p01 and readout_p10 list lengths differ");
    for (std::size_t i = 0; i < p01.size(); ++i) m.readout.push_back({p01[i], p10[i]});
  }
  try {
    m.validate();
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("noise: ") + e.what());
  }
  return m;
}

NoiseModel default_noise() {
  NoiseModel m;
  m.p1 = 0.001;
  m.p2 = 0.04;
  m.readout = {{0.02, 0.05}};
  return m;
}

NoiseModel resolve_noise(const std::string& spec) {
  if (spec == "none") return NoiseModel::none();
  if (spec == "default") return default_noise();
  std::ifstream in(spec);
  if (!in) throw ConfigError("cannot open noise file '" + spec + "'");
  return parse_noise(in);
}

HubbardSpec resolve_spec(const RunConfig& cfg, double u) {
  HubbardSpec spec;
  spec.t = cfg.t;
  spec.u = u;
  try {
    if (std::filesystem::is_regular_file(cfg.lattice)) {
      std::ifstream in(cfg.lattice);
      EdgeListFile file = parse_edge_list(in);
      spec.graph = std::move(file.graph);
      spec.weights = std::move(file.weights);
    } else {
      spec.graph = lattice_preset(cfg.lattice);
    }
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("lattice: ") + e.what());
  }
  if (!(cfg.t > 0.0)) throw ConfigError("t must be positive");
  return spec;
}

SpsaConfig resolve_spsa(const RunConfig& cfg) {
  SpsaConfig c;
  try {
    c = SpsaConfig::named(cfg.spsa);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.spsa_a) c.a = *cfg.spsa_a;
  if (cfg.spsa_c) c.c = *cfg.spsa_c;
  if (cfg.spsa_big_a) c.big_a = *cfg.spsa_big_a;
  if (cfg.spsa_alpha) c.alpha = *cfg.spsa_alpha;
  if (cfg.spsa_gamma) c.gamma = *cfg.spsa_gamma;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

Representation resolve_rep(const RunConfig& cfg) {
  try {
    return parse_representation(cfg.rep);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

MitigationOptions resolve_mitigation(const RunConfig& cfg) {
  try {
    MitigationOptions m = parse_mitigation(cfg.mitigate);
    m.calibration_shots = cfg.calibration_shots;
    if (m.readout && m.calibration_shots < 1) throw ConfigError("calibration_shots must be >= 1");
    return m;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(trim(item));
  if (parts.size() != 3) throw ConfigError("u_range: expected start:stop:step, got '" + text + "'");
  const double start = to_double("u_range", parts[0]), stop = to_double("u_range", parts[1]),
               step = to_double("u_range", parts[2]);
  if (!(step > 0.0) || stop < start) throw ConfigError("u_range: need step > 0 and stop >= start");
  std::vector<double> out;
  // Index-based so that 0.1:4:0.1 yields exactly 40 points.
  for (long k = 0;; ++k) {
    const double v = start + static_cast<double>(k) * step;
    if (v > stop + 1e-9 * step) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace cvqe::cli
