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

#include <CLI11.hpp>

#include <fstream>
#include <map>

#include "commands.h"

namespace cvqe::cli {
namespace {

using Command = int (*)(const RunConfig&, std::ostream&, std::ostream&);

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr FlagSpec kFlags[] = {
    {"--lattice", "lattice", "2x1 | line:N | grid:WxH | path to an edge-list file"},
    {"--t", "t", "hopping strength (default 1)"},
    {"--u", "u", "onsite interaction (default 2)"},
    {"--u-range", "u_range", "start:stop:step, inclusive (usweep default 0.1:4:0.1)"},
    {"--rep", "rep", "compressed | uncompressed"},
    {"--noise", "noise", "none | default | path to a noise file"},
    {"--spsa", "spsa", "standard | three-stage"},
    {"--spsa-a", "spsa_a", "SPSA gain a"},
    {"--spsa-c", "spsa_c", "SPSA gain c"},
    {"--spsa-big-a", "spsa_big_a", "SPSA stability constant A (default 10% of iterations)"},
    {"--spsa-alpha", "spsa_alpha", "SPSA step exponent"},
    {"--spsa-gamma", "spsa_gamma", "SPSA perturbation exponent"},
    {"--seeds", "seeds", "number of independent runs"},
    {"--seed", "seed", "master seed"},
    {"--shots", "shots", "shots per measurement setting (calibrate: per basis state)"},
    {"--calibration-shots", "calibration_shots", "shots per basis state for readout calibration"},
    {"--final-shots", "final_shots", "shots per setting in the final evaluation"},
    {"--mitigate", "mitigate", "none | readout | postselect | both"},
    {"--start-phi", "start_phi", "initial phi"},
    {"--start-theta", "start_theta", "initial theta"},
    {"--qubits", "qubits", "calibrate: qubit count (default: representation width)"},
    {"--out", "out", "output directory"},
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compressed-encoding VQE for the Fermi-Hubbard model"};
  app.require_subcommand(1);
  std::map<std::string, std::string> flag_values;
  std::string config_path;

  const std::pair<const char*, Command> commands[] = {
      {"exact", cmd_exact}, {"sweep", cmd_sweep}, {"vqe", cmd_vqe}, {"usweep", cmd_usweep}, {"calibrate", cmd_calibrate}};
  const std::map<std::string, std::string> descriptions = {
      {"exact", "exact ground energy and double occupancy"},
      {"sweep", "11x11 energy landscape over (phi, theta) in [0,1]^2"},
      {"vqe", "independent SPSA-driven VQE runs"},
      {"usweep", "VQE over a range of U"},
      {"calibrate", "readout confusion matrix"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    for (const FlagSpec& f : kFlags) sub->add_option(f.flag, flag_values[f.key], f.help);
    sub->add_option("--config", config_path, "key = value config file; flags take precedence");
    subs.push_back(sub);
  }

  std::vector<const char*> argv = {"cvqe"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    CLI::App* sub = subs[i];
    if (!sub->parsed()) continue;
    try {
      RunConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
        for (const auto& [key, value] : read_config_entries(in)) apply_config_entry(cfg, key, value);
      }
      for (const FlagSpec& f : kFlags)
        if (sub->count(f.flag) > 0) apply_config_entry(cfg, f.key, flag_values[f.key]);
      return commands[i].second(cfg, out, err);
    } catch (const ConfigError& e) {
      err << "config error: " << e.what() << "\n";
      return kExitConfig;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitRuntime;
    }
  }
  return kExitConfig;
}

}  // namespace cvqe::cli
