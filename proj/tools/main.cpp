// Copyright 2026 The openqfi Authors
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

// Command-line frontend. Subcommands produce CSV data files and JSON
// reports, each accompanied by a <out>.manifest.json recording the resolved
// parameters so any run can be reproduced byte-for-byte (timestamp aside).
// Exit codes: 0 success (embedded checks pass), 1 invalid input,
// 2 embedded check failure.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "openqfi/bounds.hpp"
#include "openqfi/correlations.hpp"
#include "openqfi/dynamics.hpp"
#include "openqfi/metrology.hpp"
#include "openqfi/oracle.hpp"
#include "openqfi/rng.hpp"
#include "openqfi/version.hpp"

namespace {

using nlohmann::json;

// 17 significant digits round-trip any double; '.' separator, no locale.
std::string fmt17(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

void write_manifest(const std::string& anchor_output, const std::string& command,
                    const json& parameters, const std::vector<std::string>& outputs,
                    bool with_prng) {
  json m;
  m["command"] = command;
  m["tool"] = "openqfi";
  m["version"] = openqfi::kVersion;
  m["parameters"] = parameters;
  m["outputs"] = outputs;
  if (with_prng) m["prng"] = openqfi::kPrngName;
  m["timestamp_utc"] = utc_timestamp();
  write_text_file(anchor_output + ".manifest.json", m.dump(2) + "\n");
}

std::string strip_suffix(const std::string& s, const std::string& suffix) {
  if (s.size() >= suffix.size() &&
      s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
    return s.substr(0, s.size() - suffix.size());
  return s;
}

struct TimeseriesArgs {
  double gamma0 = 1.0;
  double lambda = 0.1;
  double J = 0.0;
  double a0 = 1.0 / std::sqrt(2.0);
  double theta = 0.0;
  double t_max = 20.0;
  int t_steps = 201;
  std::string out;
};

int run_timeseries(const TimeseriesArgs& a) {
  openqfi::ModelParams p{1.0, a.lambda, a.J};
  validate(p);
  const openqfi::InitialCondition init = openqfi::make_init(a.a0, a.theta);

  const int steps = a.t_max == 0.0 ? 1 : a.t_steps;
  std::string csv = "t,qfi,lqu,w1,w2,abs_x_sq\n";
  for (int i = 0; i < steps; ++i) {
    const double tau =
        steps == 1 ? 0.0
                   : a.t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    const openqfi::AmplitudeState s = openqfi::propagate(p, init, tau);
    const double f = openqfi::qfi_closed(init, s.x).value;
    const openqfi::LquResult u = openqfi::lqu_closed(s);
    // Inputs are in units of gamma0; the emitted time column is physical.
    csv += fmt17(tau / a.gamma0) + ',' + fmt17(f) + ',' + fmt17(u.value) + ',' +
           fmt17(u.w1) + ',' + fmt17(u.w2) + ',' + fmt17(std::norm(s.x)) + '\n';
  }
  write_text_file(a.out, csv);

  json params = {{"gamma0", a.gamma0}, {"lambda", a.lambda}, {"J", a.J},
                 {"a0", a.a0},         {"theta", a.theta},   {"t_max", a.t_max},
                 {"t_steps", a.t_steps}, {"out", a.out}};
  write_manifest(a.out, "timeseries", params, {a.out}, false);
  return 0;
}

struct ScanArgs {
  std::uint64_t n = 10000;
  std::uint64_t seed = 20260819;
  std::string constraint = "free";
  std::string out;
};

int run_scan(const ScanArgs& a) {
  openqfi::ScanConfig cfg;
  cfg.n_samples = a.n;
  cfg.seed = a.seed;
  if (a.constraint == "j-zero")
    cfg.constraint = openqfi::ScanConstraint::j_zero;
  else if (a.constraint == "bell")
    cfg.constraint = openqfi::ScanConstraint::bell_init;
  else if (a.constraint == "free")
    cfg.constraint = openqfi::ScanConstraint::unconstrained;
  else
    throw CLI::ValidationError("--constraint", "unknown constraint: " + a.constraint);

  const std::vector<openqfi::BoundSample> samples = openqfi::monte_carlo_scan(cfg);

  std::string csv = "index,lambda,J,a0,theta,t,qfi,lqu,delta1,delta2\n";
  double min_d1 = 1e300, max_d1 = -1e300, min_d2 = 1e300, max_d2 = -1e300;
  std::uint64_t violations = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const openqfi::BoundSample& s = samples[i];
    csv += std::to_string(i) + ',' + fmt17(s.params.lambda) + ',' +
           fmt17(s.params.J) + ',' + fmt17(s.init.a0.real()) + ',' +
           fmt17(s.init.theta) + ',' + fmt17(s.t) + ',' + fmt17(s.qfi) + ',' +
           fmt17(s.lqu) + ',' + fmt17(s.delta1) + ',' + fmt17(s.delta2) + '\n';
    min_d1 = std::min(min_d1, s.delta1);
    max_d1 = std::max(max_d1, s.delta1);
    min_d2 = std::min(min_d2, s.delta2);
    max_d2 = std::max(max_d2, s.delta2);
    if (s.delta2 < -1e-12) ++violations;
  }
  write_text_file(a.out, csv);

  bool pass = true;
  json checks = json::object();
  if (cfg.constraint == openqfi::ScanConstraint::j_zero) {
    checks["min_delta1_nonneg"] = min_d1 >= -1e-12;
    checks["max_delta1_quarter"] = max_d1 <= 0.25 + 1e-9;
    checks["min_delta2_nonneg"] = min_d2 >= -1e-12;
    checks["max_delta2_unit"] = max_d2 <= 1.0 + 1e-9;
  } else if (cfg.constraint == openqfi::ScanConstraint::bell_init) {
    checks["min_delta1_nonneg"] = min_d1 >= -1e-12;
  }
  for (const auto& [key, ok] : checks.items()) {
    (void)key;
    if (!ok.get<bool>()) pass = false;
  }

  json summary = {{"command", "scan"},
                  {"n", a.n},
                  {"seed", a.seed},
                  {"constraint", a.constraint},
                  {"min_delta1", min_d1},
                  {"max_delta1", max_d1},
                  {"min_delta2", min_d2},
                  {"max_delta2", max_d2},
                  {"n_delta2_violations", violations},
                  {"violation_threshold", -1e-12},
                  {"checks", checks},
                  {"pass", pass}};
  const std::string summary_path = strip_suffix(a.out, ".csv") + ".summary.json";
  write_text_file(summary_path, summary.dump(2) + "\n");

  json params = {{"n", a.n}, {"seed", a.seed}, {"constraint", a.constraint},
                 {"out", a.out}};
  write_manifest(a.out, "scan", params, {a.out, summary_path}, true);

  if (!pass) {
    std::cerr << "scan: embedded bound checks failed (see " << summary_path << ")\n";
    return 2;
  }
  return 0;
}

struct CheckBoundsArgs {
  int grid_resolution = 2001;
  std::string out = "check_bounds.json";
};

int run_check_bounds(const CheckBoundsArgs& a) {
  const openqfi::GridExtrema ext = openqfi::delta_grid_extrema(a.grid_resolution);
  const bool matches_quarter = std::abs(ext.max_delta1 - 0.25) <= 1e-4;
  const bool upper_bound_ok = ext.max_delta1 <= 0.25 + 1e-9;
  const bool min_delta2_ok = ext.min_delta2 >= -1e-12;
  const bool pass = matches_quarter && min_delta2_ok;

  json report = {{"command", "check-bounds"},
                 {"grid_resolution", a.grid_resolution},
                 {"max_delta1", ext.max_delta1},
                 {"argmax_m", ext.argmax_m},
                 {"argmax_n", ext.argmax_n},
                 {"min_delta2", ext.min_delta2},
                 {"argmin_m", ext.argmin_m},
                 {"argmin_n", ext.argmin_n},
                 {"matches_quarter", matches_quarter},
                 {"upper_bound_ok", upper_bound_ok},
                 {"min_delta2_nonneg", min_delta2_ok},
                 {"pass", pass}};
  write_text_file(a.out, report.dump(2) + "\n");

  json params = {{"grid_resolution", a.grid_resolution}, {"out", a.out}};
  write_manifest(a.out, "check-bounds", params, {a.out}, false);

  if (!pass) {
    std::cerr << "check-bounds: extremum checks failed (see " << a.out << ")\n";
    return 2;
  }
  return 0;
}

struct OracleVerifyArgs {
  double lambda = 0.15;
  double J = 1.5;
  double a0 = 1.0 / std::sqrt(2.0);
  double theta = 0.0;
  double t_max = 10.0;
  double dt = 1e-3;
  std::size_t n_modes = 4000;
  double window_mult = 40.0;
  int grid_points = 101;
  std::string out = "oracle_verify.json";
};

int run_oracle_verify(const OracleVerifyArgs& a) {
  openqfi::ModelParams p{1.0, a.lambda, a.J};
  validate(p);
  const openqfi::InitialCondition init = openqfi::make_init(a.a0, a.theta);

  std::vector<double> grid;
  if (a.t_max == 0.0) {
    grid.push_back(0.0);
  } else {
    for (int i = 0; i < a.grid_points; ++i)
      grid.push_back(a.t_max * static_cast<double>(i) /
                     static_cast<double>(a.grid_points - 1));
  }

  openqfi::OracleOptions opts;
  opts.pseudomode_dt = a.dt;
  opts.bath_dt = a.dt;
  opts.n_modes = a.n_modes;
  opts.window_mult = a.window_mult;
  const openqfi::OracleReport rep = openqfi::compare_oracles(p, init, grid, opts);

  const bool pass_pm = rep.max_analytic_pseudomode < 1e-6;
  const bool pass_bath = rep.max_analytic_bath < 5e-2;
  const bool pass = pass_pm && pass_bath;

  json report = {
      {"command", "oracle-verify"},
      {"lambda", a.lambda},
      {"J", a.J},
      {"a0", a.a0},
      {"theta", a.theta},
      {"t_max", a.t_max},
      {"dt", a.dt},
      {"n_modes", a.n_modes},
      {"window_mult", a.window_mult},
      {"grid_points", static_cast<int>(grid.size())},
      {"errors",
       {{"analytic_vs_pseudomode",
         {{"max", rep.max_analytic_pseudomode}, {"rms", rep.rms_analytic_pseudomode}}},
        {"analytic_vs_bath",
         {{"max", rep.max_analytic_bath}, {"rms", rep.rms_analytic_bath}}},
        {"pseudomode_vs_bath",
         {{"max", rep.max_pseudomode_bath}, {"rms", rep.rms_pseudomode_bath}}}}},
      {"thresholds", {{"pseudomode", 1e-6}, {"bath", 5e-2}}},
      {"recurrence_warning", rep.recurrence_warning},
      {"pass_pseudomode", pass_pm},
      {"pass_bath", pass_bath},
      {"pass", pass}};
  write_text_file(a.out, report.dump(2) + "\n");

  json params = {{"lambda", a.lambda},     {"J", a.J},
                 {"a0", a.a0},             {"theta", a.theta},
                 {"t_max", a.t_max},       {"dt", a.dt},
                 {"n_modes", a.n_modes},   {"window_mult", a.window_mult},
                 {"grid_points", a.grid_points}, {"out", a.out}};
  write_manifest(a.out, "oracle-verify", params, {a.out}, false);

  if (rep.recurrence_warning)
    std::cerr << "oracle-verify: warning: t_max exceeds the bath recurrence time\n";
  if (!pass) {
    std::cerr << "oracle-verify: error thresholds exceeded (see " << a.out << ")\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-qubit open-system dynamics: QFI, LQU, and bound checks"};
  app.set_version_flag("--version", std::string("openqfi ") + openqfi::kVersion);
  app.require_subcommand(1);

  TimeseriesArgs ts;
  CLI::App* c_ts = app.add_subcommand(
      "timeseries", "QFI/LQU time series for fixed parameters (CSV)");
  c_ts->add_option("--gamma0", ts.gamma0, "Decay rate, sets the time unit")
      ->check(CLI::PositiveNumber)->capture_default_str();
  c_ts->add_option("--lambda", ts.lambda, "Spectral width (units of gamma0)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  c_ts->add_option("--J", ts.J, "Inter-qubit hopping (units of gamma0)")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  c_ts->add_option("--a0", ts.a0, "Initial |eg> amplitude, real in [0,1]")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  c_ts->add_option("--theta", ts.theta, "Embedded phase (radians)")
      ->capture_default_str();
  c_ts->add_option("--t-max", ts.t_max, "Final time (units of 1/gamma0)")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  c_ts->add_option("--t-steps", ts.t_steps, "Number of grid points")
      ->check(CLI::PositiveNumber)->capture_default_str();
  c_ts->add_option("--out", ts.out, "Output CSV path")->required();

  ScanArgs sc;
  CLI::App* c_sc = app.add_subcommand(
      "scan", "Seeded Monte Carlo scan of the QFI-LQU bounds (CSV + summary JSON)");
  c_sc->add_option("--n", sc.n, "Number of samples")->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_sc->add_option("--seed", sc.seed, "PRNG seed")->capture_default_str();
  c_sc->add_option("--constraint", sc.constraint, "One of j-zero | bell | free")
      ->check(CLI::IsMember({"j-zero", "bell", "free"}))->capture_default_str();
  c_sc->add_option("--out", sc.out, "Output CSV path")->required();

  CheckBoundsArgs cb;
  CLI::App* c_cb = app.add_subcommand(
      "check-bounds", "Grid extremization of the J = 0 delta surfaces (JSON)");
  c_cb->add_option("--grid-resolution", cb.grid_resolution, "Grid points per axis")
      ->check(CLI::Range(2, 100000))->capture_default_str();
  c_cb->add_option("--out", cb.out, "Output JSON path")->capture_default_str();

  OracleVerifyArgs ov;
  CLI::App* c_ov = app.add_subcommand(
      "oracle-verify", "Validate the analytic solution against both ODE oracles (JSON)");
  c_ov->add_option("--lambda", ov.lambda, "Spectral width (units of gamma0)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  c_ov->add_option("--J", ov.J, "Inter-qubit hopping (units of gamma0)")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  c_ov->add_option("--a0", ov.a0, "Initial |eg> amplitude, real in [0,1]")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  c_ov->add_option("--theta", ov.theta, "Embedded phase (radians)")
      ->capture_default_str();
  c_ov->add_option("--t-max", ov.t_max, "Final time (units of 1/gamma0)")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  c_ov->add_option("--dt", ov.dt, "RK4 step for both oracles")
      ->check(CLI::PositiveNumber)->capture_default_str();
  c_ov->add_option("--n-modes", ov.n_modes, "Discretized bath modes")
      ->check(CLI::PositiveNumber)->capture_default_str();
  c_ov->add_option("--window-mult", ov.window_mult,
                   "Bath window half-width in units of lambda")
      ->check(CLI::PositiveNumber)->capture_default_str();
  c_ov->add_option("--grid-points", ov.grid_points, "Comparison grid size")
      ->check(CLI::Range(2, 1000000))->capture_default_str();
  c_ov->add_option("--out", ov.out, "Output JSON path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_ts->parsed()) return run_timeseries(ts);
    if (c_sc->parsed()) return run_scan(sc);
    if (c_cb->parsed()) return run_check_bounds(cb);
    if (c_ov->parsed()) return run_oracle_verify(ov);
  } catch (const std::exception& e) {
    std::cerr << "openqfi: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
