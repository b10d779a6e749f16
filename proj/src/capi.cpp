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

#include "gsc.h"

#include <cstring>
#include <exception>
#include <map>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsc/blockmath.hpp"
#include "gsc/fullsim.hpp"
#include "gsc/optimizer.hpp"
#include "gsc/protocol.hpp"
#include "gsc/thermal.hpp"
#include "gsc/verify.hpp"

struct gsc_spec {
  gsc::ThermalSpec spec;
};

struct gsc_weights {
  gsc::WeightState state;
};

struct gsc_traj_stats {
  gsc::TrajectoryStats stats;
  // Flattened histogram views so entries can be indexed from C.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> resets;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> measurements;
};

namespace {

thread_local std::string g_last_error;

gsc_status fail(gsc_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs the body and maps exceptions onto status codes; the body only
// executes its writes after all computation succeeded, so out-params are
// untouched on failure.
template <typename Body>
gsc_status guarded(Body&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return GSC_OK;
  } catch (const std::invalid_argument& e) {
    return fail(GSC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const gsc::UnreachableTarget& e) {
    return fail(GSC_ERROR_UNREACHABLE, e.what());
  } catch (const gsc::BoundInvalid& e) {
    return fail(GSC_ERROR_BOUND_INVALID, e.what());
  } catch (const gsc::ZeroSurvival& e) {
    return fail(GSC_ERROR_ZERO_SURVIVAL, e.what());
  } catch (const std::domain_error& e) {
    return fail(GSC_ERROR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GSC_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GSC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(GSC_ERROR_INTERNAL, "unknown failure");
  }
}

gsc_status require(bool ok, const char* message) {
  return ok ? GSC_OK : fail(GSC_ERROR_INVALID_ARGUMENT, message);
}

gsc::CoolingParams to_params(const gsc_params& p) {
  return gsc::CoolingParams{p.gamma, p.delta, p.t};
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>>* histogram_of(
    const gsc_traj_stats* stats, gsc_histogram which) {
  switch (which) {
    case GSC_HIST_RESETS:
      return &stats->resets;
    case GSC_HIST_MEASUREMENTS:
      return &stats->measurements;
  }
  return nullptr;
}

}  // namespace

extern "C" {

const char* gsc_version(void) { return "1.0.0"; }

const char* gsc_status_name(gsc_status status) {
  switch (status) {
    case GSC_OK:
      return "GSC_OK";
    case GSC_ERROR_INVALID_ARGUMENT:
      return "GSC_ERROR_INVALID_ARGUMENT";
    case GSC_ERROR_DOMAIN:
      return "GSC_ERROR_DOMAIN";
    case GSC_ERROR_UNREACHABLE:
      return "GSC_ERROR_UNREACHABLE";
    case GSC_ERROR_BOUND_INVALID:
      return "GSC_ERROR_BOUND_INVALID";
    case GSC_ERROR_ZERO_SURVIVAL:
      return "GSC_ERROR_ZERO_SURVIVAL";
    case GSC_ERROR_INTERNAL:
      return "GSC_ERROR_INTERNAL";
  }
  return "GSC_ERROR_UNKNOWN";
}

const char* gsc_last_error_message(void) { return g_last_error.c_str(); }

gsc_status gsc_spec_create(double n_states, double dT_ratio,
                           gsc_spec** out_spec) {
  if (require(out_spec != nullptr, "out_spec must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    gsc::ThermalSpec spec;
    spec.n_states = n_states;
    spec.dT_ratio = dT_ratio;
    gsc::validate(spec);
    *out_spec = new gsc_spec{spec};
  });
}

gsc_status gsc_spec_create_with_p0(double n_states, double p0,
                                   gsc_spec** out_spec) {
  if (require(out_spec != nullptr, "out_spec must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    gsc::ThermalSpec spec;
    spec.n_states = n_states;
    spec.p0_override = p0;
    gsc::validate(spec);
    *out_spec = new gsc_spec{spec};
  });
}

gsc_status gsc_spec_set_split_spectrum(gsc_spec* spec, double r,
                                       gsc_level before_answer,
                                       gsc_level after_answer, gsc_bulk bulk) {
  if (require(spec != nullptr, "spec must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  if (require(bulk == GSC_BULK_ALL_LOW || bulk == GSC_BULK_ALL_HIGH ||
                  bulk == GSC_BULK_ALTERNATING,
              "unknown bulk pattern") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  if (require((before_answer == GSC_LEVEL_LOW ||
               before_answer == GSC_LEVEL_HIGH) &&
                  (after_answer == GSC_LEVEL_LOW ||
                   after_answer == GSC_LEVEL_HIGH),
              "unknown level label") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto level = [](gsc_level label) {
      return label == GSC_LEVEL_LOW ? gsc::LevelLabel::Low
                                    : gsc::LevelLabel::High;
    };
    const auto pattern = [&] {
      switch (bulk) {
        case GSC_BULK_ALL_LOW:
          return gsc::BulkPattern::AllLow;
        case GSC_BULK_ALL_HIGH:
          return gsc::BulkPattern::AllHigh;
        default:
          return gsc::BulkPattern::Alternating;
      }
    }();
    gsc::ThermalSpec updated = spec->spec;
    updated.spectrum = gsc::SpectrumModel::split_spectrum(
        r, level(before_answer), level(after_answer), pattern);
    gsc::validate(updated);
    spec->spec = updated;
  });
}

void gsc_spec_destroy(gsc_spec* spec) { delete spec; }

gsc_status gsc_boltzmann_factor(const gsc_spec* spec, double* out) {
  if (require(spec != nullptr && out != nullptr,
              "spec and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = gsc::boltzmann_factor(spec->spec); });
}

gsc_status gsc_ground_state_population(const gsc_spec* spec, double* out) {
  if (require(spec != nullptr && out != nullptr,
              "spec and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = gsc::ground_state_population(spec->spec); });
}

gsc_status gsc_characteristic_temperature(double epsilon, double n_states,
                                          double boltzmann_k, double* out) {
  if (require(out != nullptr, "out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = gsc::characteristic_temperature(epsilon, n_states, boltzmann_k);
  });
}

gsc_status gsc_block_survival(double e_left, double e_right, double gamma,
                              double delta, double t, double* out) {
  if (require(out != nullptr, "out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = gsc::survival_prob(
        gsc::generalized_block(e_left, e_right, gamma, delta), t);
  });
}

gsc_status gsc_block_propagator(double e_left, double e_right, double gamma,
                                double delta, double t, double out_reim[8]) {
  if (require(out_reim != nullptr, "out_reim must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const gsc::BlockPropagator u = gsc::propagator(
        gsc::generalized_block(e_left, e_right, gamma, delta), t);
    const std::complex<double> entries[4] = {u.ee, u.eg, u.ge, u.gg};
    for (int k = 0; k < 4; ++k) {
      out_reim[2 * k] = entries[k].real();
      out_reim[2 * k + 1] = entries[k].imag();
    }
  });
}

gsc_status gsc_weights_create(const gsc_spec* spec, const gsc_params* params,
                              gsc_weights** out_weights) {
  if (require(spec != nullptr && params != nullptr && out_weights != nullptr,
              "spec, params and out_weights must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_weights =
        new gsc_weights{gsc::initial_weights(spec->spec, to_params(*params))};
  });
}

gsc_status gsc_weights_step(gsc_weights* weights) {
  if (require(weights != nullptr, "weights must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { weights->state = gsc::step(weights->state); });
}

gsc_status gsc_weights_advance(gsc_weights* weights, uint64_t rounds) {
  if (require(weights != nullptr, "weights must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { weights->state = gsc::weights_after(weights->state, rounds); });
}

gsc_status gsc_weights_cooling_probability(const gsc_weights* weights,
                                           double* out) {
  if (require(weights != nullptr && out != nullptr,
              "weights and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = weights->state.cooling_probability(); });
}

gsc_status gsc_weights_survival(const gsc_weights* weights, double* out) {
  if (require(weights != nullptr && out != nullptr,
              "weights and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = weights->state.survival; });
}

gsc_status gsc_weights_rounds_done(const gsc_weights* weights, uint64_t* out) {
  if (require(weights != nullptr && out != nullptr,
              "weights and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = weights->state.m_done; });
}

gsc_status gsc_weights_group_count(const gsc_weights* weights, size_t* out) {
  if (require(weights != nullptr && out != nullptr,
              "weights and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = weights->state.groups.size(); });
}

gsc_status gsc_weights_group(const gsc_weights* weights, size_t index,
                             double* out_weight, double* out_b,
                             double* out_multiplicity) {
  if (require(weights != nullptr, "weights must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (index >= weights->state.groups.size())
      throw std::invalid_argument("group index out of range");
    const gsc::WeightGroup& group = weights->state.groups[index];
    if (out_weight) *out_weight = group.weight;
    if (out_b) *out_b = group.b;
    if (out_multiplicity) *out_multiplicity = group.multiplicity;
  });
}

void gsc_weights_destroy(gsc_weights* weights) { delete weights; }

gsc_status gsc_min_measurements(const gsc_spec* spec, const gsc_params* params,
                                double p_target, uint64_t* out) {
  if (require(spec != nullptr && params != nullptr && out != nullptr,
              "spec, params and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = gsc::min_measurements(spec->spec, to_params(*params), p_target);
  });
}

gsc_status gsc_measurement_bound(const gsc_spec* spec, double b2,
                                 double p_target, double* out) {
  if (require(spec != nullptr && out != nullptr,
              "spec and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = gsc::measurement_bound(spec->spec, b2, p_target); });
}

gsc_status gsc_copies_success(double p_single, uint64_t copies, double* out) {
  if (require(out != nullptr, "out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = gsc::copies_success(p_single, copies); });
}

gsc_status gsc_copies_needed(double p_single, double p_target, uint64_t* out) {
  if (require(out != nullptr, "out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = gsc::copies_needed(p_single, p_target); });
}

gsc_status gsc_gap_model_probability(const gsc_spec* spec,
                                     const gsc_params* params, uint64_t rounds,
                                     double* out) {
  if (require(spec != nullptr && params != nullptr && out != nullptr,
              "spec, params and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = gsc::gap_model_probability(spec->spec, to_params(*params), rounds);
  });
}

gsc_status gsc_min_gap_probability(const gsc_spec* spec,
                                   const gsc_params* params, uint64_t rounds,
                                   double r, double* out) {
  if (require(spec != nullptr && params != nullptr && out != nullptr,
              "spec, params and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out =
        gsc::min_gap_probability(spec->spec, to_params(*params), rounds, r);
  });
}

gsc_status gsc_strategy_one(const gsc_spec* spec, double delta1, double delta2,
                            unsigned j1, unsigned j2,
                            gsc_strategy_one_result* out) {
  if (require(spec != nullptr && out != nullptr,
              "spec and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const gsc::StrategyOneReport report =
        gsc::strategy_one(spec->spec, gsc::StrategyOneConfig{delta1, delta2,
                                                             j1, j2});
    out->p_success = report.p_success;
    out->approx_p_success = report.approx_p_success;
    out->conditional_fidelity = report.report.conditional_fidelity;
    out->survival_probability = report.report.survival_probability;
    out->b0_step1 = report.b0_step1;
    out->b0_step2 = report.b0_step2;
  });
}

gsc_status gsc_delta_for_time(double gamma, double t, int branch,
                              double* out) {
  if (require(out != nullptr, "out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = gsc::delta_for_time(gamma, t, branch); });
}

gsc_status gsc_optimize_params(double t, int branch, gsc_opt_result* out) {
  if (require(out != nullptr, "out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const gsc::OptimizationResult result = gsc::optimize_params(t, branch);
    out->gamma = result.gamma;
    out->delta = result.delta;
    out->t = result.t;
    out->objective = result.objective;
    out->b0_residual = result.b0_residual;
    out->b1 = result.b1;
    out->b2 = result.b2;
    out->branch = result.branch;
  });
}

gsc_status gsc_fullsim_cooling(const gsc_spec* spec, const gsc_params* params,
                               uint64_t answer, uint64_t rounds,
                               gsc_cooling_report* out) {
  if (require(spec != nullptr && params != nullptr && out != nullptr,
              "spec, params and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const gsc::CoolingReport report = gsc::run_shot_cooling(
        spec->spec, to_params(*params), static_cast<std::size_t>(answer),
        rounds);
    out->cooling_probability = report.cooling_probability;
    out->survival_probability = report.survival_probability;
    out->conditional_fidelity = report.conditional_fidelity;
  });
}

gsc_status gsc_fullsim_strategy_one(const gsc_spec* spec, double delta1,
                                    double delta2, unsigned j1, unsigned j2,
                                    uint64_t answer, gsc_cooling_report* out) {
  if (require(spec != nullptr && out != nullptr,
              "spec and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const gsc::CoolingReport report = gsc::run_shot_strategy_one(
        spec->spec, gsc::StrategyOneConfig{delta1, delta2, j1, j2},
        static_cast<std::size_t>(answer));
    out->cooling_probability = report.cooling_probability;
    out->survival_probability = report.survival_probability;
    out->conditional_fidelity = report.conditional_fidelity;
  });
}

gsc_status gsc_monte_carlo(const gsc_spec* spec, const gsc_params* params,
                           uint64_t answer, uint64_t rounds, uint64_t trials,
                           uint64_t seed, uint64_t max_attempts,
                           gsc_traj_stats** out_stats) {
  if (require(spec != nullptr && params != nullptr && out_stats != nullptr,
              "spec, params and out_stats must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    gsc::MonteCarloOptions options;
    options.trials = trials;
    options.seed = seed;
    if (max_attempts != 0) options.max_attempts = max_attempts;
    gsc::TrajectoryStats stats =
        gsc::monte_carlo(spec->spec, to_params(*params),
                         static_cast<std::size_t>(answer), rounds, options);
    auto boxed = std::make_unique<gsc_traj_stats>();
    boxed->resets.assign(stats.resets_histogram.begin(),
                         stats.resets_histogram.end());
    boxed->measurements.assign(stats.measurements_histogram.begin(),
                               stats.measurements_histogram.end());
    boxed->stats = std::move(stats);
    *out_stats = boxed.release();
  });
}

gsc_status gsc_traj_trials(const gsc_traj_stats* stats, uint64_t* out) {
  if (require(stats != nullptr && out != nullptr,
              "stats and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = stats->stats.trials; });
}

gsc_status gsc_traj_successes(const gsc_traj_stats* stats, uint64_t* out) {
  if (require(stats != nullptr && out != nullptr,
              "stats and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = stats->stats.successes; });
}

gsc_status gsc_traj_attempts(const gsc_traj_stats* stats, uint64_t* out) {
  if (require(stats != nullptr && out != nullptr,
              "stats and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = stats->stats.attempts; });
}

gsc_status gsc_traj_answer_hits(const gsc_traj_stats* stats, uint64_t* out) {
  if (require(stats != nullptr && out != nullptr,
              "stats and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = stats->stats.answer_hits; });
}

gsc_status gsc_traj_empirical_survival(const gsc_traj_stats* stats,
                                       double* out) {
  if (require(stats != nullptr && out != nullptr,
              "stats and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = stats->stats.empirical_survival(); });
}

gsc_status gsc_traj_empirical_fidelity(const gsc_traj_stats* stats,
                                       double* out) {
  if (require(stats != nullptr && out != nullptr,
              "stats and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = stats->stats.empirical_fidelity(); });
}

gsc_status gsc_traj_histogram_size(const gsc_traj_stats* stats,
                                   gsc_histogram which, size_t* out) {
  if (require(stats != nullptr && out != nullptr,
              "stats and out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  const auto* histogram = histogram_of(stats, which);
  if (require(histogram != nullptr, "unknown histogram selector") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  *out = histogram->size();
  g_last_error.clear();
  return GSC_OK;
}

gsc_status gsc_traj_histogram_entry(const gsc_traj_stats* stats,
                                    gsc_histogram which, size_t index,
                                    uint64_t* out_key, uint64_t* out_count) {
  if (require(stats != nullptr && out_key != nullptr && out_count != nullptr,
              "stats, out_key and out_count must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  const auto* histogram = histogram_of(stats, which);
  if (require(histogram != nullptr, "unknown histogram selector") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  if (require(index < histogram->size(), "histogram index out of range") !=
      GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  *out_key = (*histogram)[index].first;
  *out_count = (*histogram)[index].second;
  g_last_error.clear();
  return GSC_OK;
}

void gsc_traj_destroy(gsc_traj_stats* stats) { delete stats; }

gsc_status gsc_phase_kickback(const double* re, const double* im,
                              size_t n_states, uint64_t answer,
                              double* out_p_ground, double* post_re,
                              double* post_im) {
  if (require(re != nullptr && out_p_ground != nullptr,
              "re and out_p_ground must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(n_states));
    for (size_t k = 0; k < n_states; ++k)
      psi[static_cast<Eigen::Index>(k)] =
          std::complex<double>(re[k], im ? im[k] : 0.0);
    const gsc::KickbackResult result =
        gsc::phase_kickback(psi, static_cast<std::size_t>(answer));
    *out_p_ground = result.p_ground;
    if ((post_re || post_im) && result.post_ground) {
      for (size_t k = 0; k < n_states; ++k) {
        const std::complex<double> amp =
            (*result.post_ground)[static_cast<Eigen::Index>(k)];
        if (post_re) post_re[k] = amp.real();
        if (post_im) post_im[k] = amp.imag();
      }
    }
  });
}

gsc_status gsc_verify_options_default(gsc_verify_options* out) {
  if (require(out != nullptr, "out must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  const gsc::VerifyOptions defaults;
  out->max_states = defaults.max_states;
  out->cases = defaults.cases;
  out->seed = defaults.seed;
  out->trials = defaults.trials;
  g_last_error.clear();
  return GSC_OK;
}

gsc_status gsc_verify_run(const gsc_verify_options* options,
                          gsc_verify_sink sink, void* user_data,
                          int* out_all_passed, double* out_max_error) {
  if (require(options != nullptr && out_all_passed != nullptr,
              "options and out_all_passed must not be NULL") != GSC_OK)
    return GSC_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    gsc::VerifyOptions opts;
    opts.max_states = options->max_states;
    opts.cases = options->cases;
    opts.seed = options->seed;
    opts.trials = options->trials;
    gsc::VerifySink wrapped;
    if (sink)
      wrapped = [sink, user_data](const std::string& line) {
        sink(line.c_str(), user_data);
      };
    const gsc::VerifySummary summary = gsc::run_verification(opts, wrapped);
    *out_all_passed = summary.all_passed ? 1 : 0;
    if (out_max_error) *out_max_error = summary.max_error;
  });
}

}  // extern "C"
