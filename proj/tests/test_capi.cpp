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

// Exercises the shared library through the C header only. This binary links
// against libgsc, not the C++ core, so it also proves the exported surface
// is complete enough for a foreign-language binding.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "gsc.h"

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kGammaStar = 0.059267207455092681;
constexpr double kDeltaStar = 0.23612413170950505;

gsc_params star_params() { return {kGammaStar, kDeltaStar, kTwoPi}; }

// RAII so a failing CHECK cannot leak handles across test cases.
struct SpecGuard {
  gsc_spec* ptr = nullptr;
  ~SpecGuard() { gsc_spec_destroy(ptr); }
};

struct WeightsGuard {
  gsc_weights* ptr = nullptr;
  ~WeightsGuard() { gsc_weights_destroy(ptr); }
};

struct TrajGuard {
  gsc_traj_stats* ptr = nullptr;
  ~TrajGuard() { gsc_traj_destroy(ptr); }
};

}  // namespace

TEST_SUITE_BEGIN("capi");

TEST_CASE("version and status names") {
  CHECK(std::string(gsc_version()) == "1.0.0");
  CHECK(std::string(gsc_status_name(GSC_OK)) == "GSC_OK");
  CHECK(std::string(gsc_status_name(GSC_ERROR_INVALID_ARGUMENT)) ==
        "GSC_ERROR_INVALID_ARGUMENT");
  CHECK(std::string(gsc_status_name(GSC_ERROR_DOMAIN)) == "GSC_ERROR_DOMAIN");
  CHECK(std::string(gsc_status_name(GSC_ERROR_UNREACHABLE)) ==
        "GSC_ERROR_UNREACHABLE");
  CHECK(std::string(gsc_status_name(GSC_ERROR_BOUND_INVALID)) ==
        "GSC_ERROR_BOUND_INVALID");
  CHECK(std::string(gsc_status_name(GSC_ERROR_ZERO_SURVIVAL)) ==
        "GSC_ERROR_ZERO_SURVIVAL");
  CHECK(std::string(gsc_status_name(GSC_ERROR_INTERNAL)) ==
        "GSC_ERROR_INTERNAL");
  CHECK(std::string(gsc_status_name(static_cast<gsc_status>(99))) ==
        "GSC_ERROR_UNKNOWN");
}

TEST_CASE("failures leave a message, successes clear it") {
  double out = 0.0;
  CHECK(gsc_characteristic_temperature(-1.0, 10.0, 1.0, &out) ==
        GSC_ERROR_DOMAIN);
  CHECK(std::strlen(gsc_last_error_message()) > 0);

  CHECK(gsc_characteristic_temperature(1.0, 10.0, 1.0, &out) == GSC_OK);
  CHECK(std::string(gsc_last_error_message()).empty());

  CHECK(gsc_characteristic_temperature(1.0, 10.0, 1.0, nullptr) ==
        GSC_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(gsc_last_error_message()) > 0);
}

TEST_CASE("spec creation validates its inputs") {
  SpecGuard spec;
  CHECK(gsc_spec_create(1.0, 0.0, &spec.ptr) == GSC_ERROR_DOMAIN);
  CHECK(spec.ptr == nullptr);
  CHECK(gsc_spec_create(8.0, -0.5, &spec.ptr) == GSC_ERROR_DOMAIN);
  CHECK(gsc_spec_create(8.0, 0.0, nullptr) == GSC_ERROR_INVALID_ARGUMENT);
  CHECK(gsc_spec_create(8.0, 0.0, &spec.ptr) == GSC_OK);
  REQUIRE(spec.ptr != nullptr);

  CHECK(gsc_spec_set_split_spectrum(spec.ptr, 1.5, GSC_LEVEL_LOW,
                                    GSC_LEVEL_LOW, GSC_BULK_ALL_LOW) ==
        GSC_ERROR_DOMAIN);
  CHECK(gsc_spec_set_split_spectrum(nullptr, 0.1, GSC_LEVEL_LOW, GSC_LEVEL_LOW,
                                    GSC_BULK_ALL_LOW) ==
        GSC_ERROR_INVALID_ARGUMENT);
  CHECK(gsc_spec_set_split_spectrum(spec.ptr, 0.1, GSC_LEVEL_HIGH,
                                    GSC_LEVEL_LOW, GSC_BULK_ALTERNATING) ==
        GSC_OK);

  SpecGuard p0_spec;
  CHECK(gsc_spec_create_with_p0(8.0, 1.5, &p0_spec.ptr) == GSC_ERROR_DOMAIN);
  CHECK(gsc_spec_create_with_p0(8.0, 0.6, &p0_spec.ptr) == GSC_OK);

  gsc_spec_destroy(nullptr);  // must be a no-op
}

TEST_CASE("thermal scalars match the analytic anchors") {
  SpecGuard two;
  REQUIRE(gsc_spec_create(2.0, 0.0, &two.ptr) == GSC_OK);
  double a = 0.0;
  CHECK(gsc_boltzmann_factor(two.ptr, &a) == GSC_OK);
  CHECK(a == doctest::Approx(0.5).epsilon(1e-15));

  SpecGuard big;
  REQUIRE(gsc_spec_create(16.0, 0.0, &big.ptr) == GSC_OK);
  double p0 = 0.0;
  CHECK(gsc_ground_state_population(big.ptr, &p0) == GSC_OK);
  CHECK(p0 == doctest::Approx(16.0 / 31.0).epsilon(1e-15));

  double t0 = 0.0;
  CHECK(gsc_characteristic_temperature(8.3e-19, 1e23, 1.380649e-16, &t0) ==
        GSC_OK);
  CHECK(t0 == doctest::Approx(0.00011351448547801701).epsilon(1e-14));

  // A directly specified p0 has no temperature behind it.
  SpecGuard fixed;
  REQUIRE(gsc_spec_create_with_p0(8.0, 0.37, &fixed.ptr) == GSC_OK);
  CHECK(gsc_ground_state_population(fixed.ptr, &p0) == GSC_OK);
  CHECK(p0 == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(gsc_boltzmann_factor(fixed.ptr, &a) == GSC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("block survival and propagator agree") {
  double reim[8] = {0};
  CHECK(gsc_block_propagator(1.0, 0.0, 0.3, 0.2, 1.5, reim) == GSC_OK);
  CHECK(reim[0] == doctest::Approx(0.4684068871093894).epsilon(1e-13));
  CHECK(reim[1] == doctest::Approx(-0.8341864546588755).epsilon(1e-13));
  CHECK(reim[6] == doctest::Approx(0.8652305988512365).epsilon(1e-13));
  CHECK(reim[7] == doctest::Approx(-0.4082255061107561).epsilon(1e-13));

  double survival = 0.0;
  CHECK(gsc_block_survival(1.0, 0.0, 0.3, 0.2, 1.5, &survival) == GSC_OK);
  CHECK(survival == doctest::Approx(0.9152720530278524).epsilon(1e-13));
  CHECK(survival ==
        doctest::Approx(reim[6] * reim[6] + reim[7] * reim[7]).epsilon(1e-14));

  // Generic-block survival at the round-time operating point.
  CHECK(gsc_block_survival(1.0, 1.0, 0.0593, 0.23618532977304074, kTwoPi,
                           &survival) == GSC_OK);
  CHECK(survival == doctest::Approx(0.06086051598163124).epsilon(1e-12));

  // Split-level block.
  CHECK(gsc_block_survival(0.9, 1.1, 0.25, 0.4, 0.7, &survival) == GSC_OK);
  CHECK(survival == doctest::Approx(0.9251513956673371).epsilon(1e-13));

  CHECK(gsc_block_survival(1.0, 0.0, 0.3, 0.2, 1.5, nullptr) ==
        GSC_ERROR_INVALID_ARGUMENT);
  CHECK(gsc_block_propagator(1.0, 0.0, 0.3, 0.2, 1.5, nullptr) ==
        GSC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("weights lifecycle reproduces the conditioned ensemble") {
  SpecGuard spec;
  REQUIRE(gsc_spec_create(1e23, 0.0, &spec.ptr) == GSC_OK);
  const gsc_params params = star_params();

  WeightsGuard advanced;
  REQUIRE(gsc_weights_create(spec.ptr, &params, &advanced.ptr) == GSC_OK);
  CHECK(gsc_weights_advance(advanced.ptr, 3) == GSC_OK);

  double cooling = 0.0;
  double survival = 0.0;
  std::uint64_t rounds = 0;
  CHECK(gsc_weights_cooling_probability(advanced.ptr, &cooling) == GSC_OK);
  CHECK(gsc_weights_survival(advanced.ptr, &survival) == GSC_OK);
  CHECK(gsc_weights_rounds_done(advanced.ptr, &rounds) == GSC_OK);
  CHECK(cooling == doctest::Approx(0.99977462523558436).epsilon(1e-12));
  CHECK(survival == doctest::Approx(0.50011271278482528).epsilon(1e-12));
  CHECK(rounds == 3);

  // step + advance(2) must land on the same state.
  WeightsGuard stepped;
  REQUIRE(gsc_weights_create(spec.ptr, &params, &stepped.ptr) == GSC_OK);
  CHECK(gsc_weights_step(stepped.ptr) == GSC_OK);
  CHECK(gsc_weights_advance(stepped.ptr, 2) == GSC_OK);
  double stepped_cooling = 0.0;
  CHECK(gsc_weights_cooling_probability(stepped.ptr, &stepped_cooling) ==
        GSC_OK);
  CHECK(stepped_cooling == doctest::Approx(cooling).epsilon(1e-13));

  size_t group_count = 0;
  CHECK(gsc_weights_group_count(advanced.ptr, &group_count) == GSC_OK);
  CHECK(group_count == 3);
  double weight = 0.0;
  double b = 0.0;
  double multiplicity = 0.0;
  CHECK(gsc_weights_group(advanced.ptr, 0, &weight, &b, &multiplicity) ==
        GSC_OK);
  CHECK(weight == doctest::Approx(cooling).epsilon(1e-15));
  CHECK(multiplicity == 1.0);
  CHECK(b == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gsc_weights_group(advanced.ptr, group_count, &weight, &b,
                          &multiplicity) == GSC_ERROR_INVALID_ARGUMENT);

  CHECK(gsc_weights_create(nullptr, &params, &stepped.ptr) ==
        GSC_ERROR_INVALID_ARGUMENT);
  gsc_weights_destroy(nullptr);  // must be a no-op
}

TEST_CASE("a fully emptied round reports zero survival") {
  SpecGuard spec;
  REQUIRE(gsc_spec_create_with_p0(8.0, 1.0, &spec.ptr) == GSC_OK);
  const double delta = 0.2;
  const gsc_params params = {0.5, delta, 0.5 * std::acos(-1.0) / delta};
  WeightsGuard weights;
  REQUIRE(gsc_weights_create(spec.ptr, &params, &weights.ptr) == GSC_OK);
  CHECK(gsc_weights_step(weights.ptr) == GSC_ERROR_ZERO_SURVIVAL);
  CHECK(std::strlen(gsc_last_error_message()) > 0);
}

TEST_CASE("protocol-level queries and their failure statuses") {
  SpecGuard cold;
  REQUIRE(gsc_spec_create(1e23, 0.0, &cold.ptr) == GSC_OK);
  SpecGuard warm;
  REQUIRE(gsc_spec_create(1e23, 1.0, &warm.ptr) == GSC_OK);
  const gsc_params params = star_params();

  std::uint64_t m = 0;
  CHECK(gsc_min_measurements(cold.ptr, &params, 0.99, &m) == GSC_OK);
  CHECK(m == 2);
  CHECK(gsc_min_measurements(warm.ptr, &params, 0.9, &m) == GSC_OK);
  CHECK(m == 11);

  SpecGuard tiny;
  REQUIRE(gsc_spec_create(4.0, 0.0, &tiny.ptr) == GSC_OK);
  const gsc_params tie = {0.0, 0.2, kTwoPi};
  CHECK(gsc_min_measurements(tiny.ptr, &tie, 0.9, &m) ==
        GSC_ERROR_UNREACHABLE);

  double bound = 0.0;
  CHECK(gsc_measurement_bound(warm.ptr, 0.060860342479741703, 0.9, &bound) ==
        GSC_OK);
  CHECK(bound == doctest::Approx(19.704631232938222).epsilon(1e-12));
  CHECK(gsc_measurement_bound(warm.ptr, 1.0, 0.9, &bound) ==
        GSC_ERROR_BOUND_INVALID);

  std::uint64_t copies = 0;
  CHECK(gsc_copies_needed(0.5, 0.99, &copies) == GSC_OK);
  CHECK(copies == 7);
  CHECK(gsc_copies_needed(0.1, 0.99, &copies) == GSC_OK);
  CHECK(copies == 44);
  double combined = 0.0;
  CHECK(gsc_copies_success(0.5, 7, &combined) == GSC_OK);
  CHECK(combined == doctest::Approx(0.9921875).epsilon(1e-15));
  CHECK(gsc_copies_needed(0.0, 0.9, &copies) == GSC_ERROR_UNREACHABLE);

  // The gap-model answer weight is the ensemble's cooling probability, and
  // zero half-width degenerates to the same number.
  double direct = 0.0;
  CHECK(gsc_gap_model_probability(cold.ptr, &params, 3, &direct) == GSC_OK);
  CHECK(direct == doctest::Approx(0.99977462523558436).epsilon(1e-12));
  double worst = 0.0;
  CHECK(gsc_min_gap_probability(cold.ptr, &params, 3, 0.0, &worst) == GSC_OK);
  CHECK(worst == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("strategy one crosses the C boundary intact") {
  SpecGuard spec;
  REQUIRE(gsc_spec_create_with_p0(8.0, 0.6, &spec.ptr) == GSC_OK);
  gsc_strategy_one_result result;
  REQUIRE(gsc_strategy_one(spec.ptr, 0.1, 0.1, 0, 0, &result) == GSC_OK);
  CHECK(result.b0_step1 == doctest::Approx(0.96246146414400546).epsilon(1e-13));
  CHECK(result.b0_step2 == doctest::Approx(0.99993935342381379).epsilon(1e-13));
  CHECK(result.p_success == doctest::Approx(0.57744185649089641).epsilon(1e-13));
  CHECK(result.approx_p_success ==
        doctest::Approx(0.55579924197733366).epsilon(1e-13));
  CHECK(result.conditional_fidelity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(result.survival_probability ==
        doctest::Approx(result.p_success).epsilon(1e-14));

  CHECK(gsc_strategy_one(spec.ptr, 0.0, 0.1, 0, 0, &result) ==
        GSC_ERROR_DOMAIN);
}

TEST_CASE("optimizer entry points") {
  double delta = 0.0;
  CHECK(gsc_delta_for_time(0.0593, kTwoPi, 1, &delta) == GSC_OK);
  CHECK(delta == doctest::Approx(0.23618532977304074).epsilon(1e-12));

  gsc_opt_result result;
  REQUIRE(gsc_optimize_params(kTwoPi, 1, &result) == GSC_OK);
  CHECK(std::abs(result.gamma - kGammaStar) < 2e-8);
  CHECK(std::abs(result.delta - kDeltaStar) < 1e-7);
  CHECK(result.t == kTwoPi);
  CHECK(result.branch == 1);
  CHECK(result.b0_residual <= 1e-9);
  CHECK(result.b2 == doctest::Approx(0.060860342479741703).epsilon(1e-9));
  CHECK(result.objective == doctest::Approx(1.0 - result.b2).epsilon(1e-14));

  CHECK(gsc_optimize_params(0.0, 1, &result) == GSC_ERROR_DOMAIN);
  CHECK(gsc_optimize_params(kTwoPi, 0, &result) ==
        GSC_ERROR_INVALID_ARGUMENT);
  CHECK(gsc_delta_for_time(0.0, 10.0, 1, &delta) == GSC_ERROR_DOMAIN);
}

TEST_CASE("dense reference simulator through the C surface") {
  SpecGuard spec;
  REQUIRE(gsc_spec_create(16.0, 0.0, &spec.ptr) == GSC_OK);
  const gsc_params params = star_params();
  gsc_cooling_report report;
  REQUIRE(gsc_fullsim_cooling(spec.ptr, &params, 0, 3, &report) == GSC_OK);
  CHECK(report.survival_probability ==
        doctest::Approx(0.54313139610592731).epsilon(1e-10));
  CHECK(report.cooling_probability ==
        doctest::Approx(0.95028392016837759).epsilon(1e-10));
  CHECK(report.conditional_fidelity ==
        doctest::Approx(report.cooling_probability).epsilon(1e-12));

  SpecGuard fixed;
  REQUIRE(gsc_spec_create_with_p0(8.0, 0.6, &fixed.ptr) == GSC_OK);
  gsc_cooling_report swap_report;
  REQUIRE(gsc_fullsim_strategy_one(fixed.ptr, 0.1, 0.1, 0, 0, 2,
                                   &swap_report) == GSC_OK);
  CHECK(swap_report.survival_probability ==
        doctest::Approx(0.57744185649089641).epsilon(1e-10));
  CHECK(swap_report.conditional_fidelity ==
        doctest::Approx(1.0).epsilon(1e-12));

  SpecGuard huge;
  REQUIRE(gsc_spec_create(1e23, 0.0, &huge.ptr) == GSC_OK);
  CHECK(gsc_fullsim_cooling(huge.ptr, &params, 0, 1, &report) ==
        GSC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("trajectory stats accessors and histograms") {
  SpecGuard spec;
  REQUIRE(gsc_spec_create(8.0, 0.0, &spec.ptr) == GSC_OK);
  const gsc_params params = star_params();

  TrajGuard a;
  REQUIRE(gsc_monte_carlo(spec.ptr, &params, 0, 2, 400, 5, 0, &a.ptr) ==
          GSC_OK);
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t attempts = 0;
  std::uint64_t answer_hits = 0;
  CHECK(gsc_traj_trials(a.ptr, &trials) == GSC_OK);
  CHECK(gsc_traj_successes(a.ptr, &successes) == GSC_OK);
  CHECK(gsc_traj_attempts(a.ptr, &attempts) == GSC_OK);
  CHECK(gsc_traj_answer_hits(a.ptr, &answer_hits) == GSC_OK);
  CHECK(trials == 400);
  CHECK(successes <= trials);
  CHECK(answer_hits <= successes);
  CHECK(attempts >= successes);

  double survival = 0.0;
  double fidelity = 0.0;
  CHECK(gsc_traj_empirical_survival(a.ptr, &survival) == GSC_OK);
  CHECK(gsc_traj_empirical_fidelity(a.ptr, &fidelity) == GSC_OK);
  CHECK(survival ==
        doctest::Approx(static_cast<double>(successes) /
                        static_cast<double>(attempts)).epsilon(1e-15));
  CHECK(fidelity ==
        doctest::Approx(static_cast<double>(answer_hits) /
                        static_cast<double>(successes)).epsilon(1e-15));

  for (const gsc_histogram which : {GSC_HIST_RESETS, GSC_HIST_MEASUREMENTS}) {
    size_t size = 0;
    REQUIRE(gsc_traj_histogram_size(a.ptr, which, &size) == GSC_OK);
    REQUIRE(size > 0);
    std::uint64_t total = 0;
    std::uint64_t previous_key = 0;
    for (size_t i = 0; i < size; ++i) {
      std::uint64_t key = 0;
      std::uint64_t count = 0;
      REQUIRE(gsc_traj_histogram_entry(a.ptr, which, i, &key, &count) ==
              GSC_OK);
      if (i > 0) CHECK(key > previous_key);
      previous_key = key;
      total += count;
    }
    CHECK(total == trials);
    std::uint64_t key = 0;
    std::uint64_t count = 0;
    CHECK(gsc_traj_histogram_entry(a.ptr, which, size, &key, &count) ==
          GSC_ERROR_INVALID_ARGUMENT);
  }

  // Same seed, same tallies.
  TrajGuard b;
  REQUIRE(gsc_monte_carlo(spec.ptr, &params, 0, 2, 400, 5, 0, &b.ptr) ==
          GSC_OK);
  std::uint64_t b_successes = 0;
  std::uint64_t b_attempts = 0;
  CHECK(gsc_traj_successes(b.ptr, &b_successes) == GSC_OK);
  CHECK(gsc_traj_attempts(b.ptr, &b_attempts) == GSC_OK);
  CHECK(b_successes == successes);
  CHECK(b_attempts == attempts);

  CHECK(gsc_monte_carlo(spec.ptr, &params, 0, 2, 0, 5, 0, &b.ptr) ==
        GSC_ERROR_INVALID_ARGUMENT);
  gsc_traj_destroy(nullptr);  // must be a no-op
}

TEST_CASE("phase kickback through flat arrays") {
  const double re[4] = {0.5, 0.0, -0.5, 0.5};
  const double im[4] = {0.0, 0.5, 0.0, 0.0};
  double p_ground = -1.0;
  double post_re[4] = {9, 9, 9, 9};
  double post_im[4] = {9, 9, 9, 9};
  REQUIRE(gsc_phase_kickback(re, im, 4, 1, &p_ground, post_re, post_im) ==
          GSC_OK);
  CHECK(p_ground == doctest::Approx(0.25).epsilon(1e-13));
  const double answer_mass = post_re[1] * post_re[1] + post_im[1] * post_im[1];
  CHECK(answer_mass == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(post_re[0]) < 1e-13);
  CHECK(std::abs(post_im[2]) < 1e-13);

  // A real state may omit the imaginary part entirely.
  const double real_state[4] = {0.5, 0.5, 0.5, 0.5};
  REQUIRE(gsc_phase_kickback(real_state, nullptr, 4, 2, &p_ground, nullptr,
                             nullptr) == GSC_OK);
  CHECK(p_ground == doctest::Approx(0.25).epsilon(1e-13));

  CHECK(gsc_phase_kickback(nullptr, nullptr, 4, 0, &p_ground, nullptr,
                           nullptr) == GSC_ERROR_INVALID_ARGUMENT);
  CHECK(gsc_phase_kickback(re, im, 4, 7, &p_ground, nullptr, nullptr) ==
        GSC_ERROR_INVALID_ARGUMENT);
}

namespace {

struct SinkTally {
  int lines = 0;
  int passes = 0;
};

extern "C" void counting_sink(const char* line, void* user_data) {
  auto* tally = static_cast<SinkTally*>(user_data);
  ++tally->lines;
  if (std::strncmp(line, "[PASS]", 6) == 0) ++tally->passes;
}

}  // namespace

TEST_CASE("verification battery reports through the sink") {
  gsc_verify_options options;
  REQUIRE(gsc_verify_options_default(&options) == GSC_OK);
  CHECK(options.max_states >= 4);
  CHECK(options.cases > 0);

  SinkTally tally;
  int all_passed = 0;
  double max_error = -1.0;
  REQUIRE(gsc_verify_run(&options, counting_sink, &tally, &all_passed,
                         &max_error) == GSC_OK);
  CHECK(all_passed == 1);
  CHECK(tally.passes == 12);
  CHECK(tally.lines == 13);  // one per check plus the summary
  CHECK(max_error >= 0.0);
  CHECK(max_error < 1e-9);

  options.max_states = 3;  // outside [4, 64]
  CHECK(gsc_verify_run(&options, nullptr, nullptr, &all_passed, &max_error) ==
        GSC_ERROR_INVALID_ARGUMENT);
}

TEST_SUITE_END();
