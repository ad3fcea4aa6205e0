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

#include "commands.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cvqe/compressed/analytic.h"
#include "cvqe/compressed/compressed_hamiltonian.h"
#include "cvqe/compressed/matching.h"
#include "cvqe/errors.h"
#include "cvqe/hubbard/eigensolver.h"
#include "cvqe/mitigation/readout.h"
#include "cvqe/rng.h"
#include "cvqe/vqe/energy.h"
#include "cvqe/vqe/landscape.h"

namespace cvqe::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Exact {
  double energy = 0.0;
  double docc = 0.0;
};

// Ground state of the compressed Hamiltonian; the (1,1) sector ground state of
// the full model.
Exact exact_ground(const HubbardSpec& spec) {
  const CompressedHamiltonian h = compressed_hamiltonian(spec);
  const GroundState g = ground_state_dense(h.dense());
  const int n = spec.n();
  double docc = 0.0;
  for (int k = 0; k < n; ++k) docc += std::norm(g.vector[static_cast<std::size_t>(k * n + k)]);
  return {g.energy, docc / n};
}

double median(std::vector<double> v) {
  std::erase_if(v, [](double x) { return std::isnan(x); });
  if (v.empty()) return kNaN;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

json envelope(const std::vector<double>& v) {
  std::vector<double> ok;
  for (double x : v)
    if (!std::isnan(x)) ok.push_back(x);
  if (ok.empty()) return json{{"median", nullptr}, {"min", nullptr}, {"max", nullptr}};
  return json{{"median", median(ok)},
              {"min", *std::min_element(ok.begin(), ok.end())},
              {"max", *std::max_element(ok.begin(), ok.end())}};
}

json noise_json(const NoiseModel& m) {
  json readout = json::array();
  for (const ReadoutError& r : m.readout) readout.push_back({{"p01", r.p01}, {"p10", r.p10}});
  return {{"p1", m.p1}, {"p2", m.p2}, {"readout", readout}};
}

json spsa_json(const SpsaConfig& c) {
  json stages = json::array();
  for (const SpsaStage& s : c.stages)
    stages.push_back({{"iterations", s.iterations}, {"shots", s.shots}, {"gradient_estimates", s.gradient_estimates}});
  return {{"stages", stages}, {"a", c.a}, {"c", c.c}, {"A", c.stability_constant()},
          {"alpha", c.alpha}, {"gamma", c.gamma}};
}

// Runs fn(0..count-1) on a small thread pool. Results land by index, so output
// order never depends on scheduling. Exceptions are captured per item.
template <typename T>
std::vector<std::optional<T>> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn,
                                           std::vector<std::string>& errors) {
  std::vector<std::optional<T>> results(count);
  errors.assign(count, "");
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return results;
}

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& stdout_stream) : dir_(cfg.out), stdout_(stdout_stream) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  bool to_files() const { return !dir_.empty(); }

  // The primary table goes to stdout when no directory is configured.
  void primary(const std::string& name, const std::string& text) {
    if (to_files()) write(name, text);
    else stdout_ << text;
  }

  // Auxiliary files are only written with a directory.
  void file(const std::string& name, const std::string& text) {
    if (to_files()) write(name, text);
  }

 private:
  void write(const std::string& name, const std::string& text) {
    std::ofstream f(dir_ / name, std::ios::binary);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + (dir_ / name).string());
  }

  fs::path dir_;
  std::ostream& stdout_;
};

std::string row(std::initializer_list<std::string> cells) {
  std::string out;
  for (const std::string& c : cells) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out + '\n';
}

std::string num(double x) { return format_number(x); }

std::vector<double> u_values(const RunConfig& cfg) {
  if (cfg.u_range) return parse_range(*cfg.u_range);
  return {cfg.u};
}

std::string calibration_text(const ReadoutCalibration& cal) {
  std::ostringstream s;
  write_calibration(s, cal);
  return s.str();
}

int measured_qubits(const HubbardSpec& spec, Representation rep) {
  return is_two_by_one(spec) ? circuit_qubits(rep) : 2 * register_qubits(spec.n());
}

VqeOptions vqe_options(const RunConfig& cfg, const HubbardSpec& spec) {
  VqeOptions o;
  o.spec = spec;
  o.rep = resolve_rep(cfg);
  o.noise = resolve_noise(cfg.noise);
  o.mitigation = resolve_mitigation(cfg);
  o.spsa = resolve_spsa(cfg);
  o.start = {cfg.start_phi, cfg.start_theta};
  o.final_shots = cfg.final_shots;
  try {
    o.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return o;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  return fmt::format("{:.10g}", x);
}

int cmd_exact(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  Output o(cfg, out);
  std::string csv = row({"U", "t", "energy_exact", "docc_exact"});
  json analytic = json::array();
  for (double u : u_values(cfg)) {
    const HubbardSpec spec = resolve_spec(cfg, u);
    const Exact e = exact_ground(spec);
    csv += row({num(u), num(spec.t), num(e.energy), num(e.docc)});
    if (is_two_by_one(spec) && !spec.has_weights()) {
      const GroundState2x1 g = analytic_ground_2x1(u, spec.t);
      log << fmt::format("U={} analytic: alpha={} beta={} normalization={} energy={} docc={}\n", num(u), num(g.alpha),
                         num(g.beta), num(g.normalization), num(g.energy), num(g.double_occupancy));
      analytic.push_back({{"U", u}, {"t", spec.t}, {"alpha", g.alpha}, {"beta", g.beta},
                          {"normalization", g.normalization}, {"energy", g.energy},
                          {"double_occupancy", g.double_occupancy}, {"optimal_phi", g.optimal_phi},
                          {"optimal_theta", g.optimal_theta}});
    }
  }
  o.primary("exact.csv", csv);
  if (!analytic.empty()) o.file("analytic.json", analytic.dump(2) + "\n");
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const HubbardSpec spec = resolve_spec(cfg, cfg.u);
  const VqeOptions opts = vqe_options(cfg, spec);
  if (cfg.shots < 1) throw ConfigError("shots must be >= 1");
  const int runs = cfg.seeds > 0 ? cfg.seeds : 1;
  Output o(cfg, out);

  constexpr int kSide = 11;
  for (int r = 0; r < runs; ++r) {
    const std::uint64_t run_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(r));
    std::optional<ReadoutCalibration> cal;
    if (opts.mitigation.readout) {
      cal = calibrate_device(measured_qubits(spec, opts.rep), opts.noise, opts.mitigation.calibration_shots,
                             derive_seed(run_seed, 0));
      o.file(runs == 1 ? "calibration.txt" : fmt::format("calibration_run{}.txt", r), calibration_text(*cal));
    }
    const EnergyMeasurer measurer(spec, opts.rep, opts.noise, opts.mitigation, cal);
    std::vector<std::string> errors;
    const auto cells = parallel_map<std::string>(
        kSide * kSide,
        [&](std::size_t i) {
          const AnsatzParams p{0.1 * static_cast<double>(i / kSide), 0.1 * static_cast<double>(i % kSide)};
          const PointMeasurement m = measurer.measure(p, cfg.shots, derive_seed(run_seed, 1 + i));
          return row({num(p.phi), num(p.theta), num(exact_landscape(p, spec, opts.rep)), num(m.raw.value),
                      num(m.corrected.value)});
        },
        errors);
    std::string csv = row({"phi", "theta", "energy_exact", "energy_raw", "energy_corrected"});
    for (const auto& c : cells)
      if (c) csv += *c;
    for (std::size_t i = 0; i < errors.size(); ++i)
      if (!errors[i].empty()) throw std::runtime_error("sweep cell " + std::to_string(i) + ": " + errors[i]);
    o.primary(runs == 1 ? "sweep.csv" : fmt::format("sweep_run{}.csv", r), csv);
  }
  log << fmt::format("sweep: {} run(s) of {} cells, {} shots per setting\n", runs, kSide * kSide, cfg.shots);
  return kExitOk;
}

int cmd_vqe(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const HubbardSpec spec = resolve_spec(cfg, cfg.u);
  const VqeOptions opts = vqe_options(cfg, spec);
  const int runs = cfg.seeds > 0 ? cfg.seeds : 3;
  Output o(cfg, out);

  std::vector<std::string> errors;
  const auto results = parallel_map<VqeRun>(
      static_cast<std::size_t>(runs),
      [&](std::size_t r) { return run_vqe(opts, derive_seed(cfg.seed, r)); }, errors);

  const int settings = EnergyMeasurer(spec, opts.rep, opts.noise, opts.mitigation).settings();
  const std::uint64_t evals_per_run = circuit_evaluations(opts.spsa, settings);
  const double exact = exact_ground(spec).energy;

  std::string csv = row({"run", "iteration", "phi", "theta", "energy_raw", "energy_corrected"});
  json per_run = json::array();
  std::vector<double> finals_raw, finals_corr, finals_landscape;
  int failed = 0;
  for (int r = 0; r < runs; ++r) {
    const auto& res = results[static_cast<std::size_t>(r)];
    json entry = {{"run", r}, {"seed", derive_seed(cfg.seed, static_cast<std::uint64_t>(r))}};
    if (!res) {
      ++failed;
      entry["error"] = errors[static_cast<std::size_t>(r)];
      finals_raw.push_back(kNaN);
      finals_corr.push_back(kNaN);
      finals_landscape.push_back(kNaN);
      per_run.push_back(entry);
      log << fmt::format("run {} failed: {}\n", r, errors[static_cast<std::size_t>(r)]);
      continue;
    }
    for (const SpsaRecord& rec : res->trace.records)
      csv += row({std::to_string(r), std::to_string(rec.iteration), num(rec.params[0]), num(rec.params[1]),
                  num(rec.energy_raw), num(rec.energy_corrected)});
    const FinalEvaluation& f = res->final;
    const PointMeasurement& m = f.measurement;
    csv += row({std::to_string(r), std::to_string(res->trace.records.size()), num(f.params.phi), num(f.params.theta),
                num(m.raw.value), num(m.corrected.value)});
    entry["final"] = {{"phi", f.params.phi},
                      {"theta", f.params.theta},
                      {"energy_raw", m.raw.value},
                      {"energy_corrected", m.corrected.value},
                      {"docc_raw", m.docc_raw},
                      {"docc_corrected", m.docc_corrected},
                      {"energy_exact_landscape", f.energy_exact_landscape},
                      {"discarded_shots", m.discarded},
                      {"mitigation_failed", m.mitigation_failed},
                      {"shots", opts.final_shots}};
    per_run.push_back(entry);
    finals_raw.push_back(m.raw.value);
    finals_corr.push_back(m.corrected.value);
    finals_landscape.push_back(f.energy_exact_landscape);
    if (res->initial_calibration) o.file(fmt::format("calibration_run{}_initial.txt", r), calibration_text(*res->initial_calibration));
    if (f.calibration) o.file(fmt::format("calibration_run{}_final.txt", r), calibration_text(*f.calibration));
  }

  json summary = {{"command", "vqe"},
                  {"lattice", cfg.lattice},
                  {"t", spec.t},
                  {"U", spec.u},
                  {"rep", to_string(opts.rep)},
                  {"noise", noise_json(opts.noise)},
                  {"mitigate", to_string(opts.mitigation)},
                  {"spsa", spsa_json(opts.spsa)},
                  {"master_seed", cfg.seed},
                  {"runs", per_run},
                  {"energy_exact", exact},
                  {"envelope",
                   {{"energy_raw", envelope(finals_raw)},
                    {"energy_corrected", envelope(finals_corr)},
                    {"energy_exact_landscape", envelope(finals_landscape)}}},
                  {"measurement_settings", settings},
                  {"circuit_evaluations_per_run", evals_per_run},
                  {"circuit_evaluations_total", evals_per_run * static_cast<std::uint64_t>(runs)},
                  {"failed_runs", failed}};
  o.primary("trace.csv", csv);
  o.file("summary.json", summary.dump(2) + "\n");
  log << fmt::format("vqe: {} run(s), median final corrected energy {}, exact {}, {} circuit evaluations per run\n",
                     runs, num(median(finals_corr)), num(exact), evals_per_run);
  return failed ? kExitRuntime : kExitOk;
}

int cmd_usweep(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  RunConfig local = cfg;
  if (!local.u_range) local.u_range = "0.1:4:0.1";
  const std::vector<double> us = parse_range(*local.u_range);
  const int runs = cfg.seeds > 0 ? cfg.seeds : 5;
  std::vector<VqeOptions> opts;
  std::vector<Exact> exact;
  for (double u : us) {
    const HubbardSpec spec = resolve_spec(cfg, u);
    opts.push_back(vqe_options(cfg, spec));
    exact.push_back(exact_ground(spec));
  }
  Output o(cfg, out);

  const std::size_t jobs = us.size() * static_cast<std::size_t>(runs);
  std::vector<std::string> errors;
  const auto results = parallel_map<FinalEvaluation>(
      jobs,
      [&](std::size_t j) {
        const std::size_t ui = j / static_cast<std::size_t>(runs), r = j % static_cast<std::size_t>(runs);
        return run_vqe(opts[ui], derive_seed(derive_seed(cfg.seed, ui), r)).final;
      },
      errors);

  std::string csv = row({"U", "run", "energy_raw", "energy_corrected", "docc_raw", "docc_corrected", "energy_exact",
                         "docc_exact"});
  std::string agg = row({"U", "energy_exact", "docc_exact", "energy_median", "energy_min", "energy_max", "docc_median",
                         "docc_min", "docc_max", "failed_runs"});
  std::vector<double> energy_err, docc_err;
  int failed = 0;
  for (std::size_t ui = 0; ui < us.size(); ++ui) {
    std::vector<double> es, ds;
    int failed_here = 0;
    for (int r = 0; r < runs; ++r) {
      const std::size_t j = ui * static_cast<std::size_t>(runs) + static_cast<std::size_t>(r);
      const auto& f = results[j];
      double er = kNaN, ec = kNaN, dr = kNaN, dc = kNaN;
      if (f) {
        er = f->measurement.raw.value;
        ec = f->measurement.corrected.value;
        dr = f->measurement.docc_raw;
        dc = f->measurement.docc_corrected;
      } else {
        ++failed_here;
        log << fmt::format("U={} run {} failed: {}\n", num(us[ui]), r, errors[j]);
      }
      es.push_back(ec);
      ds.push_back(dc);
      csv += row({num(us[ui]), std::to_string(r), num(er), num(ec), num(dr), num(dc), num(exact[ui].energy),
                  num(exact[ui].docc)});
    }
    failed += failed_here;
    const json e = envelope(es), d = envelope(ds);
    auto field = [](const json& v) { return v.is_null() ? std::string("nan") : num(v.get<double>()); };
    agg += row({num(us[ui]), num(exact[ui].energy), num(exact[ui].docc), field(e["median"]), field(e["min"]),
                field(e["max"]), field(d["median"]), field(d["min"]), field(d["max"]), std::to_string(failed_here)});
    if (!e["median"].is_null()) energy_err.push_back(std::abs(e["median"].get<double>() - exact[ui].energy));
    if (!d["median"].is_null()) docc_err.push_back(std::abs(d["median"].get<double>() - exact[ui].docc));
  }
  const json summary = {{"command", "usweep"},
                        {"lattice", cfg.lattice},
                        {"t", cfg.t},
                        {"u_range", *local.u_range},
                        {"runs_per_u", runs},
                        {"rep", to_string(opts.front().rep)},
                        {"noise", noise_json(opts.front().noise)},
                        {"mitigate", to_string(opts.front().mitigation)},
                        {"spsa", spsa_json(opts.front().spsa)},
                        {"master_seed", cfg.seed},
                        {"median_abs_energy_error", energy_err.empty() ? json(nullptr) : json(median(energy_err))},
                        {"median_abs_docc_error", docc_err.empty() ? json(nullptr) : json(median(docc_err))},
                        {"failed_runs", failed}};
  o.primary("usweep.csv", csv);
  o.file("usweep_aggregate.csv", agg);
  o.file("usweep_summary.json", summary.dump(2) + "\n");
  log << fmt::format("usweep: {} U values x {} runs; median |energy error| {}, median |docc error| {}\n", us.size(),
                     runs, num(median(energy_err)), num(median(docc_err)));
  return failed ? kExitRuntime : kExitOk;
}

int cmd_calibrate(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const HubbardSpec spec = resolve_spec(cfg, cfg.u);
  const NoiseModel noise = resolve_noise(cfg.noise);
  const int q = cfg.qubits > 0 ? cfg.qubits : measured_qubits(spec, resolve_rep(cfg));
  if (q > 10) throw ConfigError("calibrate: at most 10 qubits");
  if (cfg.shots < 1) throw ConfigError("shots must be >= 1");
  const ReadoutCalibration cal = calibrate_device(q, noise, cfg.shots, derive_seed(cfg.seed, 0));
  Output o(cfg, out);
  o.primary("calibration.txt", calibration_text(cal));
  log << fmt::format("calibrate: {} qubits, {} shots per basis state\n", q, cfg.shots);
  return kExitOk;
}

}  // namespace cvqe::cli
