// Copyright 2026 The gsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library exclusively through the
// public C API so that every code path a C consumer would use stays
// exercised. Emits CSV on stdout (12 significant digits, RFC-4180
// quoting); --out additionally writes the same bytes to a file through a
// temp-file rename. Exit codes: 0 success, 1 computation failure,
// 2 usage or configuration error.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsc.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr double kTwoPi = 6.283185307179586;

// Exit code 2: the request itself is malformed (flags, config file,
// infeasible constraint).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit code 1: the request was well-formed but the computation failed.
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string describe(gsc_status status) {
  std::string text = gsc_status_name(status);
  const char* message = gsc_last_error_message();
  if (message && *message) {
    text += ": ";
    text += message;
  }
  return text;
}

void check(gsc_status status, const std::string& what) {
  if (status != GSC_OK) throw ComputeError(what + ": " + describe(status));
}

// For failures caused by user-supplied parameters (infeasible revival
// constraint, out-of-range thermal data) the request is at fault.
void check_config(gsc_status status, const std::string& what) {
  if (status == GSC_OK) return;
  if (status == GSC_ERROR_DOMAIN || status == GSC_ERROR_INVALID_ARGUMENT)
    throw UsageError(what + ": " + describe(status));
  throw ComputeError(what + ": " + describe(status));
}

std::string num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string num(std::uint64_t value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%" PRIu64, value);
  return buffer;
}

std::string num(int value) { return std::to_string(value); }

class CsvBuilder {
 public:
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) text_ += ',';
      text_ += quoted(fields[i]);
    }
    text_ += '\n';
  }
  const std::string& text() const { return text_; }

 private:
  static std::string quoted(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
    return out;
  }
  std::string text_;
};

// stdout always; --out gets the identical bytes, written atomically.
void emit(const std::string& text, const std::string& out_path) {
  std::fwrite(text.data(), 1, text.size(), stdout);
  std::fflush(stdout);
  if (out_path.empty()) return;
  const std::string tmp_path = out_path + ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ComputeError("cannot open " + tmp_path + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw ComputeError("failed writing " + tmp_path);
  }
  if (std::rename(tmp_path.c_str(), out_path.c_str()) != 0) {
    std::remove(tmp_path.c_str());
    throw ComputeError("failed renaming " + tmp_path + " to " + out_path);
  }
}

// ---- config files ---------------------------------------------------------

json load_config(const std::string& path, const char* command,
                 const std::set<std::string>& allowed) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  json data;
  try {
    data = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (!data.is_object())
    throw UsageError("config " + path + ": top level must be an object");
  for (const auto& item : data.items()) {
    if (!allowed.count(item.key()))
      throw UsageError("config " + path + ": unknown key '" + item.key() +
                       "' for command '" + command + "'");
  }
  return data;
}

double cfg_double(const json& cfg, const std::string& key) {
  const json& value = cfg.at(key);
  if (!value.is_number())
    throw UsageError("config: key '" + key + "' must be a number");
  return value.get<double>();
}

std::uint64_t cfg_u64(const json& cfg, const std::string& key) {
  const json& value = cfg.at(key);
  if (!value.is_number_unsigned() && !value.is_number_integer())
    throw UsageError("config: key '" + key + "' must be a whole number");
  if (value.is_number_integer() && value.get<std::int64_t>() < 0)
    throw UsageError("config: key '" + key + "' must be nonnegative");
  return value.get<std::uint64_t>();
}

int cfg_int(const json& cfg, const std::string& key) {
  const json& value = cfg.at(key);
  if (!value.is_number_integer())
    throw UsageError("config: key '" + key + "' must be an integer");
  return value.get<int>();
}

std::string cfg_string(const json& cfg, const std::string& key) {
  const json& value = cfg.at(key);
  if (!value.is_string())
    throw UsageError("config: key '" + key + "' must be a string");
  return value.get<std::string>();
}

std::vector<double> cfg_double_list(const json& cfg, const std::string& key) {
  const json& value = cfg.at(key);
  if (value.is_number()) return {value.get<double>()};
  if (!value.is_array())
    throw UsageError("config: key '" + key +
                     "' must be a number or an array of numbers");
  std::vector<double> out;
  for (const json& entry : value) {
    if (!entry.is_number())
      throw UsageError("config: key '" + key +
                       "' must contain only numbers");
    out.push_back(entry.get<double>());
  }
  return out;
}

// ---- shared option plumbing -----------------------------------------------

struct SpecHandle {
  gsc_spec* ptr = nullptr;
  SpecHandle() = default;
  SpecHandle(const SpecHandle&) = delete;
  SpecHandle& operator=(const SpecHandle&) = delete;
  ~SpecHandle() { gsc_spec_destroy(ptr); }
};

void make_spec(SpecHandle& handle, double n_states, bool p0_set, double p0,
               double dT_ratio) {
  if (p0_set)
    check_config(gsc_spec_create_with_p0(n_states, p0, &handle.ptr),
                 "thermal spec");
  else
    check_config(gsc_spec_create(n_states, dT_ratio, &handle.ptr),
                 "thermal spec");
}

// Round parameters: fully explicit, or derived. With neither gamma nor
// delta given the round is the optimum at the requested time; gamma alone
// pins delta through the full-revival constraint; delta alone runs at
// zero bias.
struct ParamInputs {
  double gamma = 0.0;
  double delta = 0.0;
  double t = kTwoPi;
  int branch = 1;
  bool gamma_set = false;
  bool delta_set = false;
};

gsc_params resolve_round_params(const ParamInputs& in) {
  gsc_params params{in.gamma, in.delta, in.t};
  if (!in.gamma_set && !in.delta_set) {
    gsc_opt_result result;
    check_config(gsc_optimize_params(in.t, in.branch, &result),
                 "parameter optimization");
    params.gamma = result.gamma;
    params.delta = result.delta;
  } else if (in.gamma_set && !in.delta_set) {
    check_config(gsc_delta_for_time(in.gamma, in.t, in.branch, &params.delta),
                 "revival-constraint coupling");
  } else if (!in.gamma_set) {
    params.gamma = 0.0;
  }
  return params;
}

// true when the flag was given on the command line, false when it came
// from the config file or nowhere.
bool flag_given(const CLI::App& cmd, const std::string& name) {
  return cmd.count(name) > 0;
}

// ---- optimize ---------------------------------------------------------------

struct OptimizeOptions {
  std::string config_path;
  std::string out_path;
  double t = 0.0;
  int branch = 1;
};

void run_optimize(const CLI::App& cmd, OptimizeOptions& opt) {
  const json cfg =
      load_config(opt.config_path, "optimize", {"t", "branch", "out"});
  bool t_known = flag_given(cmd, "--t");
  if (!t_known && cfg.contains("t")) {
    opt.t = cfg_double(cfg, "t");
    t_known = true;
  }
  if (!flag_given(cmd, "--branch") && cfg.contains("branch"))
    opt.branch = cfg_int(cfg, "branch");
  if (!flag_given(cmd, "--out") && cfg.contains("out"))
    opt.out_path = cfg_string(cfg, "out");
  if (!t_known)
    throw UsageError("optimize: missing required parameter t "
                     "(--t or config key \"t\")");

  gsc_opt_result result;
  check_config(gsc_optimize_params(opt.t, opt.branch, &result),
               "optimize: infeasible revival constraint");

  CsvBuilder csv;
  csv.row({"gamma", "delta", "b0", "b1", "b2", "inv_b2", "b0_residual",
           "objective", "t", "branch"});
  csv.row({num(result.gamma), num(result.delta), num(1.0 - result.b0_residual),
           num(result.b1), num(result.b2), num(1.0 / result.b2),
           num(result.b0_residual), num(result.objective), num(result.t),
           num(result.branch)});
  emit(csv.text(), opt.out_path);
}

// ---- fig2 -------------------------------------------------------------------

struct Fig2Options {
  std::string config_path;
  std::string out_path;
  double n_states = 1e23;
  std::vector<double> dT_ratios;
  std::uint64_t m_max = 20;
  double p_target = 0.0;
  ParamInputs params;
};

void run_fig2(const CLI::App& cmd, Fig2Options& opt) {
  const json cfg = load_config(opt.config_path, "fig2",
                               {"N", "dT_ratio", "gamma", "delta", "t",
                                "branch", "M_max", "P_target", "out"});
  if (!flag_given(cmd, "--N") && cfg.contains("N"))
    opt.n_states = cfg_double(cfg, "N");
  if (!flag_given(cmd, "--dT-ratio") && cfg.contains("dT_ratio"))
    opt.dT_ratios = cfg_double_list(cfg, "dT_ratio");
  if (!flag_given(cmd, "--M") && cfg.contains("M_max"))
    opt.m_max = cfg_u64(cfg, "M_max");
  if (!flag_given(cmd, "--t") && cfg.contains("t"))
    opt.params.t = cfg_double(cfg, "t");
  if (!flag_given(cmd, "--branch") && cfg.contains("branch"))
    opt.params.branch = cfg_int(cfg, "branch");
  if (!flag_given(cmd, "--out") && cfg.contains("out"))
    opt.out_path = cfg_string(cfg, "out");
  opt.params.gamma_set = flag_given(cmd, "--gamma") || cfg.contains("gamma");
  opt.params.delta_set = flag_given(cmd, "--delta") || cfg.contains("delta");
  if (!flag_given(cmd, "--gamma") && cfg.contains("gamma"))
    opt.params.gamma = cfg_double(cfg, "gamma");
  if (!flag_given(cmd, "--delta") && cfg.contains("delta"))
    opt.params.delta = cfg_double(cfg, "delta");
  const bool p_target_set = flag_given(cmd, "--P-target") ||
                            cfg.contains("P_target");
  if (!flag_given(cmd, "--P-target") && cfg.contains("P_target"))
    opt.p_target = cfg_double(cfg, "P_target");
  if (opt.dT_ratios.empty()) opt.dT_ratios = {0.0, 1.0, 3.0, 9.0};

  const gsc_params params = resolve_round_params(opt.params);

  CsvBuilder csv;
  csv.row({"M", "dT_ratio", "cooling_probability", "survival_probability"});
  for (double dT : opt.dT_ratios) {
    SpecHandle spec;
    make_spec(spec, opt.n_states, false, 0.0, dT);
    gsc_weights* weights = nullptr;
    check(gsc_weights_create(spec.ptr, &params, &weights), "fig2: weights");
    for (std::uint64_t m = 0; m <= opt.m_max; ++m) {
      if (m > 0) {
        const gsc_status status = gsc_weights_step(weights);
        if (status != GSC_OK) {
          gsc_weights_destroy(weights);
          throw ComputeError("fig2: round " + num(m) + ": " +
                             describe(status));
        }
      }
      double cooling = 0.0;
      double survival = 0.0;
      check(gsc_weights_cooling_probability(weights, &cooling),
            "fig2: cooling");
      check(gsc_weights_survival(weights, &survival), "fig2: survival");
      csv.row({num(m), num(dT), num(cooling), num(survival)});
    }
    gsc_weights_destroy(weights);
  }

  if (p_target_set) {
    double b2 = 0.0;
    check(gsc_block_survival(1.0, 1.0, params.gamma, params.delta, params.t,
                             &b2),
          "fig2: generic-block survival");
    for (double dT : opt.dT_ratios) {
      SpecHandle spec;
      make_spec(spec, opt.n_states, false, 0.0, dT);
      std::string m_min_text = "unreachable";
      std::uint64_t m_min = 0;
      gsc_status status =
          gsc_min_measurements(spec.ptr, &params, opt.p_target, &m_min);
      if (status == GSC_OK)
        m_min_text = num(m_min);
      else if (status != GSC_ERROR_UNREACHABLE)
        throw ComputeError("fig2: measurement count: " + describe(status));
      std::string bound_text = "n/a";
      double bound = 0.0;
      status = gsc_measurement_bound(spec.ptr, b2, opt.p_target, &bound);
      if (status == GSC_OK)
        bound_text = num(bound);
      else if (status != GSC_ERROR_BOUND_INVALID)
        throw ComputeError("fig2: measurement bound: " + describe(status));
      std::fprintf(stderr,
                   "P_target=%s dT_ratio=%s: M_min=%s measurement_bound=%s\n",
                   num(opt.p_target).c_str(), num(dT).c_str(),
                   m_min_text.c_str(), bound_text.c_str());
    }
  }
  emit(csv.text(), opt.out_path);
}

// ---- fig4 -------------------------------------------------------------------

struct Fig4Options {
  std::string config_path;
  std::string out_path;
  double n_states = 1e23;
  std::vector<double> dT_ratios;
  std::vector<double> r_grid;
  std::uint64_t rounds = 4;
  ParamInputs params;
};

void run_fig4(const CLI::App& cmd, Fig4Options& opt) {
  const json cfg = load_config(opt.config_path, "fig4",
                               {"N", "dT_ratio", "gamma", "delta", "t",
                                "branch", "M", "r_grid", "out"});
  if (!flag_given(cmd, "--N") && cfg.contains("N"))
    opt.n_states = cfg_double(cfg, "N");
  if (!flag_given(cmd, "--dT-ratio") && cfg.contains("dT_ratio"))
    opt.dT_ratios = cfg_double_list(cfg, "dT_ratio");
  if (!flag_given(cmd, "--r") && cfg.contains("r_grid"))
    opt.r_grid = cfg_double_list(cfg, "r_grid");
  if (!flag_given(cmd, "--M") && cfg.contains("M"))
    opt.rounds = cfg_u64(cfg, "M");
  if (!flag_given(cmd, "--t") && cfg.contains("t"))
    opt.params.t = cfg_double(cfg, "t");
  if (!flag_given(cmd, "--branch") && cfg.contains("branch"))
    opt.params.branch = cfg_int(cfg, "branch");
  if (!flag_given(cmd, "--out") && cfg.contains("out"))
    opt.out_path = cfg_string(cfg, "out");
  opt.params.gamma_set = flag_given(cmd, "--gamma") || cfg.contains("gamma");
  opt.params.delta_set = flag_given(cmd, "--delta") || cfg.contains("delta");
  if (!flag_given(cmd, "--gamma") && cfg.contains("gamma"))
    opt.params.gamma = cfg_double(cfg, "gamma");
  if (!flag_given(cmd, "--delta") && cfg.contains("delta"))
    opt.params.delta = cfg_double(cfg, "delta");
  if (opt.dT_ratios.empty()) opt.dT_ratios = {0.0, 1.0, 3.0, 9.0};
  if (opt.r_grid.empty())
    opt.r_grid = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30};

  for (double r : opt.r_grid)
    if (!(r >= 0.0 && r < 1.0))
      throw UsageError("fig4: r must be in [0, 1), got " + num(r));

  const gsc_params params = resolve_round_params(opt.params);

  CsvBuilder csv;
  csv.row({"r", "dT_ratio", "min_cooling_probability"});
  std::vector<double> previous(opt.dT_ratios.size());
  std::vector<bool> nonincreasing(opt.dT_ratios.size(), true);
  for (std::size_t ri = 0; ri < opt.r_grid.size(); ++ri) {
    for (std::size_t di = 0; di < opt.dT_ratios.size(); ++di) {
      SpecHandle spec;
      make_spec(spec, opt.n_states, false, 0.0, opt.dT_ratios[di]);
      double min_prob = 0.0;
      check(gsc_min_gap_probability(spec.ptr, &params, opt.rounds,
                                    opt.r_grid[ri], &min_prob),
            "fig4: worst-case cooling probability");
      csv.row({num(opt.r_grid[ri]), num(opt.dT_ratios[di]), num(min_prob)});
      if (ri > 0 && min_prob > previous[di] + 1e-15)
        nonincreasing[di] = false;
      previous[di] = min_prob;
    }
  }
  for (std::size_t di = 0; di < opt.dT_ratios.size(); ++di)
    std::fprintf(stderr,
                 "dT_ratio=%s: min_cooling_probability nonincreasing in "
                 "r: %s\n",
                 num(opt.dT_ratios[di]).c_str(),
                 nonincreasing[di] ? "yes" : "no");
  emit(csv.text(), opt.out_path);
}

// ---- strategy1 --------------------------------------------------------------

struct Strategy1Options {
  std::string config_path;
  std::string out_path;
  double n_states = 8.0;
  double p0 = 0.0;
  double dT_ratio = 0.0;
  double delta1 = 0.1;
  double delta2 = 0.1;
  unsigned j1 = 0;
  unsigned j2 = 0;
};

void run_strategy1(const CLI::App& cmd, Strategy1Options& opt) {
  const json cfg = load_config(opt.config_path, "strategy1",
                               {"N", "p0", "dT_ratio", "delta1", "delta2",
                                "j1", "j2", "out"});
  if (!flag_given(cmd, "--N") && cfg.contains("N"))
    opt.n_states = cfg_double(cfg, "N");
  const bool p0_set = flag_given(cmd, "--p0") || cfg.contains("p0");
  if (!flag_given(cmd, "--p0") && cfg.contains("p0"))
    opt.p0 = cfg_double(cfg, "p0");
  if (!flag_given(cmd, "--dT-ratio") && cfg.contains("dT_ratio"))
    opt.dT_ratio = cfg_double(cfg, "dT_ratio");
  if (!flag_given(cmd, "--delta1") && cfg.contains("delta1"))
    opt.delta1 = cfg_double(cfg, "delta1");
  if (!flag_given(cmd, "--delta2") && cfg.contains("delta2"))
    opt.delta2 = cfg_double(cfg, "delta2");
  if (!flag_given(cmd, "--j1") && cfg.contains("j1"))
    opt.j1 = static_cast<unsigned>(cfg_u64(cfg, "j1"));
  if (!flag_given(cmd, "--j2") && cfg.contains("j2"))
    opt.j2 = static_cast<unsigned>(cfg_u64(cfg, "j2"));
  if (!flag_given(cmd, "--out") && cfg.contains("out"))
    opt.out_path = cfg_string(cfg, "out");

  SpecHandle spec;
  make_spec(spec, opt.n_states, p0_set, opt.p0, opt.dT_ratio);
  double p0 = 0.0;
  check(gsc_ground_state_population(spec.ptr, &p0), "strategy1: p0");

  gsc_strategy_one_result result;
  check_config(gsc_strategy_one(spec.ptr, opt.delta1, opt.delta2, opt.j1,
                                opt.j2, &result),
               "strategy1");

  CsvBuilder csv;
  csv.row({"p0", "delta1", "delta2", "j1", "j2", "b0_step1", "b0_step2",
           "p_success", "approx_p_success", "conditional_fidelity",
           "survival_probability"});
  csv.row({num(p0), num(opt.delta1), num(opt.delta2),
           num(static_cast<std::uint64_t>(opt.j1)),
           num(static_cast<std::uint64_t>(opt.j2)), num(result.b0_step1),
           num(result.b0_step2), num(result.p_success),
           num(result.approx_p_success), num(result.conditional_fidelity),
           num(result.survival_probability)});
  emit(csv.text(), opt.out_path);
}

// ---- trajectory -------------------------------------------------------------

struct TrajectoryOptions {
  std::string config_path;
  std::string out_path;
  double n_states = 16.0;
  double p0 = 0.0;
  double dT_ratio = 0.0;
  std::uint64_t rounds = 3;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::uint64_t answer = 0;
  std::uint64_t max_attempts = 0;
  ParamInputs params;
};

void run_trajectory(const CLI::App& cmd, TrajectoryOptions& opt) {
  const json cfg = load_config(opt.config_path, "trajectory",
                               {"N", "p0", "dT_ratio", "gamma", "delta", "t",
                                "branch", "M", "trials", "seed", "w",
                                "max_attempts", "out"});
  if (!flag_given(cmd, "--N") && cfg.contains("N"))
    opt.n_states = cfg_double(cfg, "N");
  const bool p0_set = flag_given(cmd, "--p0") || cfg.contains("p0");
  if (!flag_given(cmd, "--p0") && cfg.contains("p0"))
    opt.p0 = cfg_double(cfg, "p0");
  if (!flag_given(cmd, "--dT-ratio") && cfg.contains("dT_ratio"))
    opt.dT_ratio = cfg_double(cfg, "dT_ratio");
  if (!flag_given(cmd, "--M") && cfg.contains("M"))
    opt.rounds = cfg_u64(cfg, "M");
  if (!flag_given(cmd, "--trials") && cfg.contains("trials"))
    opt.trials = cfg_u64(cfg, "trials");
  if (!flag_given(cmd, "--seed") && cfg.contains("seed"))
    opt.seed = cfg_u64(cfg, "seed");
  if (!flag_given(cmd, "--w") && cfg.contains("w"))
    opt.answer = cfg_u64(cfg, "w");
  if (!flag_given(cmd, "--max-attempts") && cfg.contains("max_attempts"))
    opt.max_attempts = cfg_u64(cfg, "max_attempts");
  if (!flag_given(cmd, "--t") && cfg.contains("t"))
    opt.params.t = cfg_double(cfg, "t");
  if (!flag_given(cmd, "--branch") && cfg.contains("branch"))
    opt.params.branch = cfg_int(cfg, "branch");
  if (!flag_given(cmd, "--out") && cfg.contains("out"))
    opt.out_path = cfg_string(cfg, "out");
  opt.params.gamma_set = flag_given(cmd, "--gamma") || cfg.contains("gamma");
  opt.params.delta_set = flag_given(cmd, "--delta") || cfg.contains("delta");
  if (!flag_given(cmd, "--gamma") && cfg.contains("gamma"))
    opt.params.gamma = cfg_double(cfg, "gamma");
  if (!flag_given(cmd, "--delta") && cfg.contains("delta"))
    opt.params.delta = cfg_double(cfg, "delta");

  if (!(opt.n_states >= 2 && opt.n_states == std::floor(opt.n_states) &&
        opt.n_states <= 4096))
    throw UsageError("trajectory: N must be an integer in [2, 4096]");
  if (opt.answer >= static_cast<std::uint64_t>(opt.n_states))
    throw UsageError("trajectory: w must be below N");

  const gsc_params params = resolve_round_params(opt.params);

  SpecHandle spec;
  make_spec(spec, opt.n_states, p0_set, opt.p0, opt.dT_ratio);
  gsc_traj_stats* stats = nullptr;
  check(gsc_monte_carlo(spec.ptr, &params, opt.answer, opt.rounds, opt.trials,
                        opt.seed, opt.max_attempts, &stats),
        "trajectory");

  CsvBuilder csv;
  csv.row({"statistic", "value"});
  std::uint64_t u = 0;
  double x = 0.0;
  check(gsc_traj_trials(stats, &u), "trajectory: trials");
  csv.row({"trials", num(u)});
  check(gsc_traj_successes(stats, &u), "trajectory: successes");
  csv.row({"successes", num(u)});
  check(gsc_traj_attempts(stats, &u), "trajectory: attempts");
  csv.row({"attempts", num(u)});
  check(gsc_traj_answer_hits(stats, &u), "trajectory: answer_hits");
  csv.row({"answer_hits", num(u)});
  check(gsc_traj_empirical_survival(stats, &x), "trajectory: survival");
  csv.row({"empirical_survival", num(x)});
  check(gsc_traj_empirical_fidelity(stats, &x), "trajectory: fidelity");
  csv.row({"empirical_fidelity", num(x)});
  const struct {
    gsc_histogram which;
    const char* label;
  } histograms[] = {{GSC_HIST_RESETS, "resets"},
                    {GSC_HIST_MEASUREMENTS, "measurements"}};
  for (const auto& histogram : histograms) {
    std::size_t size = 0;
    check(gsc_traj_histogram_size(stats, histogram.which, &size),
          "trajectory: histogram");
    for (std::size_t i = 0; i < size; ++i) {
      std::uint64_t key = 0;
      std::uint64_t count = 0;
      check(gsc_traj_histogram_entry(stats, histogram.which, i, &key, &count),
            "trajectory: histogram entry");
      csv.row({std::string(histogram.label) + "[" + num(key) + "]",
               num(count)});
    }
  }
  gsc_traj_destroy(stats);
  emit(csv.text(), opt.out_path);
}

// ---- verify -----------------------------------------------------------------

struct VerifyOptions {
  std::string config_path;
  std::string out_path;
  gsc_verify_options options;
};

struct VerifySinkState {
  CsvBuilder* csv;
};

extern "C" void verify_sink(const char* line, void* user_data) {
  auto* state = static_cast<VerifySinkState*>(user_data);
  std::fprintf(stderr, "%s\n", line);
  char status[8] = {0};
  char name[64] = {0};
  unsigned cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  if (std::sscanf(line, "[%7[^]]] %63s cases=%u max_err=%lf tol=%lf", status,
                  name, &cases, &max_error, &tolerance) == 5) {
    state->csv->row({name, status, num(static_cast<std::uint64_t>(cases)),
                     num(max_error), num(tolerance)});
  }
}

int run_verify(const CLI::App& cmd, VerifyOptions& opt) {
  const json cfg = load_config(opt.config_path, "verify",
                               {"n", "cases", "trials", "seed", "out"});
  if (!flag_given(cmd, "--n") && cfg.contains("n"))
    opt.options.max_states = static_cast<std::uint32_t>(cfg_u64(cfg, "n"));
  if (!flag_given(cmd, "--cases") && cfg.contains("cases"))
    opt.options.cases = static_cast<std::uint32_t>(cfg_u64(cfg, "cases"));
  if (!flag_given(cmd, "--trials") && cfg.contains("trials"))
    opt.options.trials = cfg_u64(cfg, "trials");
  if (!flag_given(cmd, "--seed") && cfg.contains("seed"))
    opt.options.seed = cfg_u64(cfg, "seed");
  if (!flag_given(cmd, "--out") && cfg.contains("out"))
    opt.out_path = cfg_string(cfg, "out");

  CsvBuilder csv;
  csv.row({"check", "status", "cases", "max_error", "tolerance"});
  VerifySinkState state{&csv};
  int all_passed = 0;
  double max_error = 0.0;
  check_config(gsc_verify_run(&opt.options, verify_sink, &state, &all_passed,
                              &max_error),
               "verify");
  emit(csv.text(), opt.out_path);
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Measurement-conditioned ground-state-cooling search: parameter "
      "optimization, figure sweeps, trajectory sampling, verification."};
  app.require_subcommand(1);

  OptimizeOptions optimize_opt;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Best round parameters at a fixed round time");
  optimize->add_option("--config", optimize_opt.config_path,
                       "JSON config file");
  optimize->add_option("--t", optimize_opt.t, "Round time");
  optimize->add_option("--branch", optimize_opt.branch,
                       "Answer-revival branch (default 1)");
  optimize->add_option("--out", optimize_opt.out_path, "Also write CSV here");

  Fig2Options fig2_opt;
  CLI::App* fig2 = app.add_subcommand(
      "fig2", "Cooling and survival probability vs measurement count");
  fig2->add_option("--config", fig2_opt.config_path, "JSON config file");
  fig2->add_option("--N", fig2_opt.n_states, "Database size (default 1e23)");
  fig2->add_option("--dT-ratio", fig2_opt.dT_ratios,
                   "Temperature offsets deltaT/T0 (default 0,1,3,9)")
      ->delimiter(',');
  fig2->add_option("--M", fig2_opt.m_max, "Largest round count (default 20)");
  fig2->add_option("--gamma", fig2_opt.params.gamma, "Ancilla bias");
  fig2->add_option("--delta", fig2_opt.params.delta, "Exchange coupling");
  fig2->add_option("--t", fig2_opt.params.t, "Round time (default 2 pi)");
  fig2->add_option("--branch", fig2_opt.params.branch, "Revival branch");
  fig2->add_option("--P-target", fig2_opt.p_target,
                   "Report round counts reaching this cooling probability");
  fig2->add_option("--out", fig2_opt.out_path, "Also write CSV here");

  Fig4Options fig4_opt;
  CLI::App* fig4 = app.add_subcommand(
      "fig4", "Worst-case cooling probability vs excited-level splitting");
  fig4->add_option("--config", fig4_opt.config_path, "JSON config file");
  fig4->add_option("--N", fig4_opt.n_states, "Database size (default 1e23)");
  fig4->add_option("--dT-ratio", fig4_opt.dT_ratios,
                   "Temperature offsets deltaT/T0 (default 0,1,3,9)")
      ->delimiter(',');
  fig4->add_option("--r", fig4_opt.r_grid,
                   "Splitting half-widths (default 0 to 0.3 step 0.05)")
      ->delimiter(',');
  fig4->add_option("--M", fig4_opt.rounds, "Round count (default 4)");
  fig4->add_option("--gamma", fig4_opt.params.gamma, "Ancilla bias");
  fig4->add_option("--delta", fig4_opt.params.delta, "Exchange coupling");
  fig4->add_option("--t", fig4_opt.params.t, "Round time (default 2 pi)");
  fig4->add_option("--branch", fig4_opt.params.branch, "Revival branch");
  fig4->add_option("--out", fig4_opt.out_path, "Also write CSV here");

  Strategy1Options strategy1_opt;
  CLI::App* strategy1 = app.add_subcommand(
      "strategy1", "Exact two-round swap schedule (unit fidelity)");
  strategy1->add_option("--config", strategy1_opt.config_path,
                        "JSON config file");
  strategy1->add_option("--N", strategy1_opt.n_states,
                        "Database size (default 8)");
  strategy1->add_option("--p0", strategy1_opt.p0,
                        "Initial ground population (overrides dT-ratio)");
  strategy1->add_option("--dT-ratio", strategy1_opt.dT_ratio,
                        "Temperature offset deltaT/T0 (default 0)");
  strategy1->add_option("--delta1", strategy1_opt.delta1,
                        "Round-one coupling (default 0.1)");
  strategy1->add_option("--delta2", strategy1_opt.delta2,
                        "Round-two coupling (default 0.1)");
  strategy1->add_option("--j1", strategy1_opt.j1,
                        "Round-one half-swap index (default 0)");
  strategy1->add_option("--j2", strategy1_opt.j2,
                        "Round-two half-swap index (default 0)");
  strategy1->add_option("--out", strategy1_opt.out_path,
                        "Also write CSV here");

  TrajectoryOptions trajectory_opt;
  CLI::App* trajectory = app.add_subcommand(
      "trajectory", "Monte Carlo trajectories with reset-on-excited repeats");
  trajectory->add_option("--config", trajectory_opt.config_path,
                         "JSON config file");
  trajectory->add_option("--N", trajectory_opt.n_states,
                         "Database size (default 16)");
  trajectory->add_option("--p0", trajectory_opt.p0,
                         "Initial ground population (overrides dT-ratio)");
  trajectory->add_option("--dT-ratio", trajectory_opt.dT_ratio,
                         "Temperature offset deltaT/T0 (default 0)");
  trajectory->add_option("--M", trajectory_opt.rounds,
                         "Rounds per attempt (default 3)");
  trajectory->add_option("--trials", trajectory_opt.trials,
                         "Trajectories to sample (default 10000)");
  trajectory->add_option("--seed", trajectory_opt.seed,
                         "Random seed (default 1)");
  trajectory->add_option("--w", trajectory_opt.answer,
                         "Answer state index (default 0)");
  trajectory->add_option("--max-attempts", trajectory_opt.max_attempts,
                         "Reset budget per trial (default 100000)");
  trajectory->add_option("--gamma", trajectory_opt.params.gamma,
                         "Ancilla bias");
  trajectory->add_option("--delta", trajectory_opt.params.delta,
                         "Exchange coupling");
  trajectory->add_option("--t", trajectory_opt.params.t,
                         "Round time (default 2 pi)");
  trajectory->add_option("--branch", trajectory_opt.params.branch,
                         "Revival branch");
  trajectory->add_option("--out", trajectory_opt.out_path,
                         "Also write CSV here");

  VerifyOptions verify_opt;
  gsc_verify_options_default(&verify_opt.options);
  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the analytic pipeline against the dense "
                "simulator");
  verify->add_option("--config", verify_opt.config_path, "JSON config file");
  verify->add_option("--n", verify_opt.options.max_states,
                     "Largest database in randomized sweeps (default 16)");
  verify->add_option("--cases", verify_opt.options.cases,
                     "Random cases per check (default 100)");
  verify->add_option("--trials", verify_opt.options.trials,
                     "Monte Carlo sample size (default 4000)");
  verify->add_option("--seed", verify_opt.options.seed, "Random seed");
  verify->add_option("--out", verify_opt.out_path, "Also write CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (optimize->parsed()) {
      run_optimize(*optimize, optimize_opt);
    } else if (fig2->parsed()) {
      run_fig2(*fig2, fig2_opt);
    } else if (fig4->parsed()) {
      run_fig4(*fig4, fig4_opt);
    } else if (strategy1->parsed()) {
      run_strategy1(*strategy1, strategy1_opt);
    } else if (trajectory->parsed()) {
      run_trajectory(*trajectory, trajectory_opt);
    } else if (verify->parsed()) {
      return run_verify(*verify, verify_opt);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
