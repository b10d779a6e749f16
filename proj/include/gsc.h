/* Copyright 2026 The gsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the measurement-conditioned ground-state-cooling library.
 *
 * The library analyzes a search protocol in which an ancilla qubit is
 * repeatedly coupled to a thermal oracle register and measured; runs are
 * kept only when every measurement finds the ancilla in its ground state,
 * which filters the register toward the oracle's unique ground (answer)
 * state. Exact results come from a 2x2 block decomposition of the joint
 * Hamiltonian; an independent dense simulator provides cross-checks.
 *
 * Conventions:
 *   - Every fallible function returns a gsc_status and writes results
 *     through out-pointers. GSC_OK is zero.
 *   - On failure, gsc_last_error_message() returns a thread-local
 *     description of the most recent error on the calling thread.
 *   - Objects created by *_create functions must be released with the
 *     matching *_destroy (safe on NULL).
 *   - Energies are in units of the oracle gap; hbar = 1. Database sizes
 *     are doubles so that N = 1e23 works end to end; only the dense
 *     simulator requires an integral size (at most 4096).
 */

#ifndef GSC_H
#define GSC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GSC_BUILD)
#define GSC_API __declspec(dllexport)
#else
#define GSC_API __declspec(dllimport)
#endif
#elif defined(GSC_BUILD)
#define GSC_API __attribute__((visibility("default")))
#else
#define GSC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsc_status {
  GSC_OK = 0,
  GSC_ERROR_INVALID_ARGUMENT = 1, /* malformed input (null, out of range) */
  GSC_ERROR_DOMAIN = 2,           /* mathematically inapplicable input */
  GSC_ERROR_UNREACHABLE = 3,      /* requested target can never be reached */
  GSC_ERROR_BOUND_INVALID = 4,    /* closed-form bound does not apply */
  GSC_ERROR_ZERO_SURVIVAL = 5,    /* conditioned record has probability 0 */
  GSC_ERROR_INTERNAL = 6
} gsc_status;

/* Excitation level labels and bulk patterns of the split oracle spectrum:
 * excited energies sit at 1 - r (low) or 1 + r (high). */
typedef enum gsc_level { GSC_LEVEL_LOW = 0, GSC_LEVEL_HIGH = 1 } gsc_level;

typedef enum gsc_bulk {
  GSC_BULK_ALL_LOW = 0,
  GSC_BULK_ALL_HIGH = 1,
  GSC_BULK_ALTERNATING = 2
} gsc_bulk;

typedef enum gsc_histogram {
  GSC_HIST_RESETS = 0,      /* resets before success, per trial */
  GSC_HIST_MEASUREMENTS = 1 /* ancilla measurements consumed, per trial */
} gsc_histogram;

/* Thermal description of the oracle register (opaque). */
typedef struct gsc_spec gsc_spec;
/* Conditioned block-weight ensemble (opaque). */
typedef struct gsc_weights gsc_weights;
/* Monte Carlo trajectory tallies (opaque). */
typedef struct gsc_traj_stats gsc_traj_stats;

/* One cooling round: joint evolution for time t with ancilla bias gamma
 * and exchange coupling delta, then a conditioned ancilla measurement. */
typedef struct gsc_params {
  double gamma;
  double delta;
  double t;
} gsc_params;

GSC_API const char* gsc_version(void);
GSC_API const char* gsc_status_name(gsc_status status);
/* Thread-local message for the most recent failure on this thread; empty
 * string if the last call succeeded. The pointer stays valid until the
 * next library call on the same thread. */
GSC_API const char* gsc_last_error_message(void);

/* ---- thermal spec ----------------------------------------------------- */

/* Gibbs preparation at temperature (1 + dT_ratio) * T0 where T0 is the
 * characteristic temperature of an N-state database. */
GSC_API gsc_status gsc_spec_create(double n_states, double dT_ratio,
                                   gsc_spec** out_spec);
/* Preparation with a directly specified ground population p0 in (0, 1];
 * the remainder is uniform over the other N - 1 states. */
GSC_API gsc_status gsc_spec_create_with_p0(double n_states, double p0,
                                           gsc_spec** out_spec);
/* Replace the degenerate excited manifold by levels 1 -+ r with the given
 * placement next to the answer and in the bulk. */
GSC_API gsc_status gsc_spec_set_split_spectrum(gsc_spec* spec, double r,
                                               gsc_level before_answer,
                                               gsc_level after_answer,
                                               gsc_bulk bulk);
GSC_API void gsc_spec_destroy(gsc_spec* spec);

/* a = N^(-1/(1 + dT_ratio)); requires a temperature-model spec. */
GSC_API gsc_status gsc_boltzmann_factor(const gsc_spec* spec, double* out);
GSC_API gsc_status gsc_ground_state_population(const gsc_spec* spec,
                                               double* out);
/* T0 = epsilon / (k ln N) in the units of epsilon and k supplied. */
GSC_API gsc_status gsc_characteristic_temperature(double epsilon,
                                                  double n_states,
                                                  double boltzmann_k,
                                                  double* out);

/* ---- 2x2 block math ---------------------------------------------------- */

/* Survival |U_gg|^2 of the block pairing oracle energies e_left (excited
 * ancilla) and e_right (ground ancilla). */
GSC_API gsc_status gsc_block_survival(double e_left, double e_right,
                                      double gamma, double delta, double t,
                                      double* out);
/* Full propagator as interleaved re/im pairs, row-major over (e, g):
 * out[0..1] = U_ee, out[2..3] = U_eg, out[4..5] = U_ge, out[6..7] = U_gg. */
GSC_API gsc_status gsc_block_propagator(double e_left, double e_right,
                                        double gamma, double delta, double t,
                                        double out_reim[8]);

/* ---- conditioned ensemble ---------------------------------------------- */

GSC_API gsc_status gsc_weights_create(const gsc_spec* spec,
                                      const gsc_params* params,
                                      gsc_weights** out_weights);
/* Apply one conditioned round in place. */
GSC_API gsc_status gsc_weights_step(gsc_weights* weights);
/* Apply `rounds` conditioned rounds in place (closed form, log-domain). */
GSC_API gsc_status gsc_weights_advance(gsc_weights* weights, uint64_t rounds);
GSC_API gsc_status gsc_weights_cooling_probability(const gsc_weights* weights,
                                                   double* out);
GSC_API gsc_status gsc_weights_survival(const gsc_weights* weights,
                                        double* out);
GSC_API gsc_status gsc_weights_rounds_done(const gsc_weights* weights,
                                           uint64_t* out);
GSC_API gsc_status gsc_weights_group_count(const gsc_weights* weights,
                                           size_t* out);
/* Group 0 is always the answer block. */
GSC_API gsc_status gsc_weights_group(const gsc_weights* weights, size_t index,
                                     double* out_weight, double* out_b,
                                     double* out_multiplicity);
GSC_API void gsc_weights_destroy(gsc_weights* weights);

/* ---- protocol-level quantities ----------------------------------------- */

/* Smallest number of all-ground rounds reaching answer weight p_target. */
GSC_API gsc_status gsc_min_measurements(const gsc_spec* spec,
                                        const gsc_params* params,
                                        double p_target, uint64_t* out);
/* Closed-form round estimate log(PN / (1 - P - aP)) / log(1 / b2),
 * clamped at zero. */
GSC_API gsc_status gsc_measurement_bound(const gsc_spec* spec, double b2,
                                         double p_target, double* out);
/* 1 - (1 - p_single)^copies. */
GSC_API gsc_status gsc_copies_success(double p_single, uint64_t copies,
                                      double* out);
/* Smallest copy count whose combined success reaches p_target. */
GSC_API gsc_status gsc_copies_needed(double p_single, double p_target,
                                     uint64_t* out);
/* Answer weight after `rounds` conditioned rounds for the spec's spectrum. */
GSC_API gsc_status gsc_gap_model_probability(const gsc_spec* spec,
                                             const gsc_params* params,
                                             uint64_t rounds, double* out);
/* Worst case of the above over all 12 split-spectrum placements at
 * half-width r. */
GSC_API gsc_status gsc_min_gap_probability(const gsc_spec* spec,
                                           const gsc_params* params,
                                           uint64_t rounds, double r,
                                           double* out);

typedef struct gsc_strategy_one_result {
  double p_success;            /* exact: p0 * b0(round 1) * b0(round 2) */
  double approx_p_success;     /* simplified estimate, see header docs */
  double conditional_fidelity; /* 1 by construction */
  double survival_probability;
  double b0_step1;
  double b0_step2;
} gsc_strategy_one_result;

/* Exact two-round swap schedule (gamma = 0 then gamma = -1/2, times
 * t_i = (pi/2 + pi j_i) / delta_i). Requires a degenerate spectrum. */
GSC_API gsc_status gsc_strategy_one(const gsc_spec* spec, double delta1,
                                    double delta2, unsigned j1, unsigned j2,
                                    gsc_strategy_one_result* out);

/* ---- round-parameter optimization -------------------------------------- */

typedef struct gsc_opt_result {
  double gamma;
  double delta;
  double t;
  double objective;   /* per-round generic-block removal, 1 - b2 */
  double b0_residual; /* |1 - b0|, zero up to roundoff */
  double b1;
  double b2;
  int branch;
} gsc_opt_result;

/* Coupling that keeps the answer block at a full revival for the given
 * round time and revival branch. */
GSC_API gsc_status gsc_delta_for_time(double gamma, double t, int branch,
                                      double* out);
/* Maximize generic-block removal subject to the full-revival constraint. */
GSC_API gsc_status gsc_optimize_params(double t, int branch,
                                       gsc_opt_result* out);

/* ---- dense reference simulator ----------------------------------------- */

typedef struct gsc_cooling_report {
  double cooling_probability;
  double survival_probability;
  double conditional_fidelity;
} gsc_cooling_report;

/* Exact conditioned ensemble run on the full 2N-dimensional joint space.
 * Requires an integral database size of at most 4096. */
GSC_API gsc_status gsc_fullsim_cooling(const gsc_spec* spec,
                                       const gsc_params* params,
                                       uint64_t answer, uint64_t rounds,
                                       gsc_cooling_report* out);
GSC_API gsc_status gsc_fullsim_strategy_one(const gsc_spec* spec,
                                            double delta1, double delta2,
                                            unsigned j1, unsigned j2,
                                            uint64_t answer,
                                            gsc_cooling_report* out);

/* Sampled trajectories with reset-on-excited repetition. max_attempts
 * caps the resets per trial; pass 0 for the default (100000). */
GSC_API gsc_status gsc_monte_carlo(const gsc_spec* spec,
                                   const gsc_params* params, uint64_t answer,
                                   uint64_t rounds, uint64_t trials,
                                   uint64_t seed, uint64_t max_attempts,
                                   gsc_traj_stats** out_stats);
GSC_API gsc_status gsc_traj_trials(const gsc_traj_stats* stats, uint64_t* out);
GSC_API gsc_status gsc_traj_successes(const gsc_traj_stats* stats,
                                      uint64_t* out);
GSC_API gsc_status gsc_traj_attempts(const gsc_traj_stats* stats,
                                     uint64_t* out);
GSC_API gsc_status gsc_traj_answer_hits(const gsc_traj_stats* stats,
                                        uint64_t* out);
GSC_API gsc_status gsc_traj_empirical_survival(const gsc_traj_stats* stats,
                                               double* out);
GSC_API gsc_status gsc_traj_empirical_fidelity(const gsc_traj_stats* stats,
                                               double* out);
GSC_API gsc_status gsc_traj_histogram_size(const gsc_traj_stats* stats,
                                           gsc_histogram which, size_t* out);
/* Entries are ordered by key, ascending. */
GSC_API gsc_status gsc_traj_histogram_entry(const gsc_traj_stats* stats,
                                            gsc_histogram which, size_t index,
                                            uint64_t* out_key,
                                            uint64_t* out_count);
GSC_API void gsc_traj_destroy(gsc_traj_stats* stats);

/* One-measurement readout of a known answer (Hadamard, oracle phase,
 * Hadamard, measure). `re`/`im` hold the oracle state amplitudes; `im` may
 * be NULL for a real state. On outcome g the oracle collapses onto the
 * answer; the post-state is written to post_re/post_im when non-NULL. */
GSC_API gsc_status gsc_phase_kickback(const double* re, const double* im,
                                      size_t n_states, uint64_t answer,
                                      double* out_p_ground, double* post_re,
                                      double* post_im);

/* ---- verification battery ---------------------------------------------- */

typedef struct gsc_verify_options {
  uint32_t max_states; /* largest database in randomized sweeps: [4, 64] */
  uint32_t cases;      /* random cases per check */
  uint64_t seed;
  uint64_t trials;     /* Monte Carlo sample size */
} gsc_verify_options;

typedef void (*gsc_verify_sink)(const char* line, void* user_data);

GSC_API gsc_status gsc_verify_options_default(gsc_verify_options* out);
/* Runs the cross-check battery; one line per check goes to `sink` (may be
 * NULL). all_passed is 1/0; max_error is the worst error among the
 * tight-tolerance checks. */
GSC_API gsc_status gsc_verify_run(const gsc_verify_options* options,
                                  gsc_verify_sink sink, void* user_data,
                                  int* out_all_passed, double* out_max_error);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GSC_H */
