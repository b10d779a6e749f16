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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gsc/fullsim.hpp"
#include "gsc/protocol.hpp"
#include "gsc/random.hpp"
#include "gsc/thermal.hpp"

using gsc::CoolingParams;
using gsc::CoolingReport;
using gsc::FullState;
using gsc::MonteCarloOptions;
using gsc::SpectrumModel;
using gsc::ThermalSpec;
using gsc::TrajectoryStats;

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kGammaStar = 0.059267207455092681;
constexpr double kDeltaStar = 0.23612413170950505;

CoolingParams star_params() { return {kGammaStar, kDeltaStar, kTwoPi}; }

ThermalSpec gibbs(double n_states, double dT_ratio) {
  ThermalSpec spec;
  spec.n_states = n_states;
  spec.dT_ratio = dT_ratio;
  return spec;
}

ThermalSpec with_p0(double n_states, double p0) {
  ThermalSpec spec;
  spec.n_states = n_states;
  spec.p0_override = p0;
  return spec;
}

}  // namespace

TEST_SUITE_BEGIN("fullsim");

TEST_CASE("joint index layout and basis states") {
  CHECK(gsc::joint_index(0, gsc::kAncillaGround) == 0);
  CHECK(gsc::joint_index(0, gsc::kAncillaExcited) == 1);
  CHECK(gsc::joint_index(3, gsc::kAncillaGround) == 6);

  const FullState state = FullState::basis(4, 2, gsc::kAncillaExcited);
  CHECK(state.oracle_states() == 4);
  CHECK(state.norm() == doctest::Approx(1.0));
  CHECK(std::abs(state.amps[5] - 1.0) < 1e-15);
  CHECK_THROWS_AS(FullState::basis(4, 4, gsc::kAncillaGround),
                  std::invalid_argument);
}

TEST_CASE("joint Hamiltonian entries") {
  const std::vector<double> energies = {0.0, 1.0, 1.0};
  const double gamma = 0.3;
  const double delta = 0.2;
  const Eigen::MatrixXcd h = gsc::build_hamiltonian(energies, gamma, delta);
  REQUIRE(h.rows() == 6);
  CHECK((h - h.adjoint()).norm() < 1e-14);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(h(2 * k, 2 * k) - (energies[k] + gamma)) < 1e-15);
    CHECK(std::abs(h(2 * k + 1, 2 * k + 1) - (energies[k] - gamma)) < 1e-15);
  }
  // Exchange couples |k, e> to |k+1 mod N, g>.
  CHECK(std::abs(h(1, 2) - delta) < 1e-15);
  CHECK(std::abs(h(3, 4) - delta) < 1e-15);
  CHECK(std::abs(h(5, 0) - delta) < 1e-15);
  CHECK(std::abs(h(1, 4)) == 0.0);

  CHECK_THROWS_AS(gsc::build_hamiltonian({1.0}, 0.0, 0.1), std::domain_error);
}

TEST_CASE("evolution is unitary and refuses non-Hermitian input") {
  std::mt19937_64 rng(20260814);
  const std::vector<double> energies =
      gsc::oracle_energies(5, 2, SpectrumModel::degenerate());
  const gsc::HamiltonianEvolver evolver(
      gsc::build_hamiltonian(energies, -0.4, 0.3));
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    FullState psi;
    psi.amps = Eigen::VectorXcd(10);
    for (Eigen::Index k = 0; k < 10; ++k)
      psi.amps[k] = std::complex<double>(amp(rng), amp(rng));
    psi.amps.normalize();
    const FullState evolved = evolver.evolve(psi, 1.7);
    CHECK(evolved.norm() == doctest::Approx(1.0).epsilon(1e-13));
  }

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(4, 4);
  bad(0, 1) = 1.0;  // no conjugate partner
  CHECK_THROWS_AS(gsc::HamiltonianEvolver{bad}, std::invalid_argument);
}

TEST_CASE("ancilla measurement splits and renormalizes") {
  FullState psi;
  psi.amps = Eigen::VectorXcd::Zero(8);
  psi.amps[gsc::joint_index(0, gsc::kAncillaGround)] = 0.6;
  psi.amps[gsc::joint_index(2, gsc::kAncillaExcited)] = 0.8;
  const gsc::AncillaMeasurement m = gsc::measure_ancilla(psi);
  CHECK(m.p_ground == doctest::Approx(0.36).epsilon(1e-15));
  REQUIRE(m.post_ground.has_value());
  REQUIRE(m.post_excited.has_value());
  CHECK(m.post_ground->norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(m.post_ground->amps[0] - 1.0) < 1e-15);
  CHECK(std::abs(m.post_excited->amps[5] - 1.0) < 1e-15);

  // A pure ground-sector state has no excited branch to collapse into.
  const FullState pure = FullState::basis(4, 1, gsc::kAncillaGround);
  const gsc::AncillaMeasurement pure_m = gsc::measure_ancilla(pure);
  CHECK(pure_m.p_ground == 1.0);
  CHECK_FALSE(pure_m.post_excited.has_value());
}

TEST_CASE("dense conditioned run matches the analytic ensemble") {
  std::mt19937_64 rng(20260814);
  std::uniform_real_distribution<double> gamma_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> delta_dist(0.001, 0.5);
  std::uniform_real_distribution<double> time_dist(0.1, 2.0 * kTwoPi);
  std::uniform_real_distribution<double> dT_dist(0.0, 5.0);
  std::uniform_int_distribution<int> n_dist(4, 24);
  std::uniform_int_distribution<std::uint64_t> m_dist(0, 5);

  for (int i = 0; i < 60; ++i) {
    const int n = n_dist(rng);
    const ThermalSpec spec = gibbs(n, dT_dist(rng));
    const CoolingParams params{gamma_dist(rng), delta_dist(rng),
                               time_dist(rng)};
    const std::uint64_t rounds = m_dist(rng);
    const std::size_t answer =
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);

    const CoolingReport dense =
        gsc::run_shot_cooling(spec, params, answer, rounds);
    const gsc::WeightState analytic = gsc::weights_after(
        gsc::initial_weights(spec, params), rounds);
    CHECK(dense.survival_probability ==
          doctest::Approx(analytic.survival).epsilon(1e-10));
    CHECK(dense.cooling_probability ==
          doctest::Approx(analytic.cooling_probability()).epsilon(1e-10));
  }
}

TEST_CASE("dense run at the published N = 16 anchor") {
  const CoolingReport report =
      gsc::run_shot_cooling(gibbs(16.0, 0.0), star_params(), 0, 3);
  CHECK(report.survival_probability ==
        doctest::Approx(0.54313139610592731).epsilon(1e-10));
  CHECK(report.cooling_probability ==
        doctest::Approx(0.95028392016837759).epsilon(1e-10));
}

TEST_CASE("dense worst-case split placement matches the analytic search") {
  ThermalSpec spec = gibbs(16.0, 0.0);
  spec.spectrum = SpectrumModel::split_spectrum(
      0.1, gsc::LevelLabel::High, gsc::LevelLabel::Low,
      gsc::BulkPattern::Alternating);
  const CoolingReport dense =
      gsc::run_shot_cooling(spec, star_params(), 0, 2);
  CHECK(dense.cooling_probability ==
        doctest::Approx(0.89110065730628).epsilon(1e-10));
  CHECK(gsc::gap_model_probability(spec, star_params(), 2) ==
        doctest::Approx(0.89110065730628).epsilon(1e-12));
}

TEST_CASE("dense two-round swap schedule") {
  const CoolingReport report = gsc::run_shot_strategy_one(
      with_p0(8.0, 0.6), gsc::StrategyOneConfig{0.1, 0.1, 0, 0}, 2);
  CHECK(report.conditional_fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.cooling_probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.survival_probability ==
        doctest::Approx(0.57744185649089641).epsilon(1e-10));

  ThermalSpec split = gibbs(8.0, 0.0);
  split.spectrum = SpectrumModel::split_spectrum(
      0.1, gsc::LevelLabel::Low, gsc::LevelLabel::Low,
      gsc::BulkPattern::AllLow);
  CHECK_THROWS_AS(
      gsc::run_shot_strategy_one(split, gsc::StrategyOneConfig{}, 0),
      std::invalid_argument);
}

TEST_CASE("dense simulator rejects non-enumerable databases") {
  CHECK_THROWS_AS(gsc::run_shot_cooling(gibbs(1e23, 0.0), star_params(), 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gsc::run_shot_cooling(gibbs(16.5, 0.0), star_params(), 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gsc::run_shot_cooling(gibbs(16.0, 0.0), star_params(), 16, 1),
                  std::invalid_argument);
}

TEST_CASE("trajectory sampling is reproducible and self-consistent") {
  MonteCarloOptions options;
  options.trials = 2000;
  options.seed = 42;
  const ThermalSpec spec = gibbs(8.0, 0.0);
  const TrajectoryStats a =
      gsc::monte_carlo(spec, star_params(), 0, 2, options);
  const TrajectoryStats b =
      gsc::monte_carlo(spec, star_params(), 0, 2, options);
  CHECK(a.successes == b.successes);
  CHECK(a.attempts == b.attempts);
  CHECK(a.answer_hits == b.answer_hits);
  CHECK(a.resets_histogram == b.resets_histogram);
  CHECK(a.measurements_histogram == b.measurements_histogram);

  options.seed = 43;
  const TrajectoryStats c =
      gsc::monte_carlo(spec, star_params(), 0, 2, options);
  CHECK(c.attempts != a.attempts);

  CHECK(a.trials == 2000);
  CHECK(a.successes <= a.trials);
  CHECK(a.answer_hits <= a.successes);
  CHECK(a.attempts >= a.successes);
  std::uint64_t reset_total = 0;
  for (const auto& [key, count] : a.resets_histogram) reset_total += count;
  CHECK(reset_total == a.trials);
  std::uint64_t measured_total = 0;
  for (const auto& [key, count] : a.measurements_histogram)
    measured_total += count;
  CHECK(measured_total == a.trials);
}

TEST_CASE("trajectory estimates agree with the dense probabilities") {
  MonteCarloOptions options;
  options.trials = 4000;
  options.seed = 7;
  const ThermalSpec spec = gibbs(8.0, 0.0);
  const TrajectoryStats stats =
      gsc::monte_carlo(spec, star_params(), 3, 2, options);
  const CoolingReport dense =
      gsc::run_shot_cooling(spec, star_params(), 3, 2);

  // Attempts are geometric with success probability = survival; the MLE
  // successes/attempts has standard error p sqrt((1 - p) / trials).
  const double p = dense.survival_probability;
  const double se_survival =
      p * std::sqrt((1.0 - p) / static_cast<double>(stats.trials));
  CHECK(std::abs(stats.empirical_survival() - p) < 3.0 * se_survival);

  const double f = dense.cooling_probability;
  const double se_fidelity =
      std::sqrt(f * (1.0 - f) / static_cast<double>(stats.successes));
  CHECK(std::abs(stats.empirical_fidelity() - f) < 3.0 * se_fidelity);
}

TEST_CASE("the reset budget caps unlucky trials") {
  MonteCarloOptions options;
  options.trials = 200;
  options.seed = 3;
  options.max_attempts = 1;
  const TrajectoryStats stats =
      gsc::monte_carlo(gibbs(8.0, 0.0), star_params(), 0, 3, options);
  CHECK(stats.successes < stats.trials);  // some single attempts fail
  CHECK(stats.attempts == stats.trials);
  for (const auto& [resets, count] : stats.resets_histogram)
    CHECK(resets <= 1);
}

TEST_CASE("per-trial random streams do not collide") {
  // Nearby seeds and trial indices must give distinct engines.
  auto a = gsc::trajectory_engine(1, 0);
  auto b = gsc::trajectory_engine(1, 1);
  auto c = gsc::trajectory_engine(2, 0);
  CHECK(a() != b());
  CHECK(a() != c());
  CHECK(gsc::uniform_unit(a) >= 0.0);
  CHECK(gsc::uniform_unit(a) < 1.0);
}

TEST_CASE("one-measurement readout of a known answer") {
  Eigen::VectorXcd psi(4);
  psi << std::complex<double>(0.5, 0.0), std::complex<double>(0.0, 0.5),
      std::complex<double>(-0.5, 0.0), std::complex<double>(0.5, 0.0);
  const gsc::KickbackResult result = gsc::phase_kickback(psi, 1);
  CHECK(result.p_ground == doctest::Approx(0.25).epsilon(1e-13));
  REQUIRE(result.post_ground.has_value());
  // Ground outcome leaves the register exactly on the answer.
  CHECK(std::abs((*result.post_ground)[1]) == doctest::Approx(1.0).epsilon(1e-13));
  REQUIRE(result.post_excited.has_value());
  CHECK(std::abs((*result.post_excited)[1]) < 1e-13);

  std::mt19937_64 rng(20260814);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = (i % 2 == 0) ? 4 : 8;
    Eigen::VectorXcd state(static_cast<Eigen::Index>(n));
    for (Eigen::Index k = 0; k < state.size(); ++k)
      state[k] = std::complex<double>(amp(rng), amp(rng));
    const std::size_t answer =
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const gsc::KickbackResult kick = gsc::phase_kickback(state, answer);
    const double expected =
        std::norm(state[static_cast<Eigen::Index>(answer)]) /
        state.squaredNorm();
    CHECK(kick.p_ground == doctest::Approx(expected).epsilon(1e-12));
    if (kick.post_ground)
      CHECK(std::abs((*kick.post_ground)[static_cast<Eigen::Index>(answer)]) ==
            doctest::Approx(1.0).epsilon(1e-12));
  }

  // No overlap with the answer: the ground outcome is (numerically) dead.
  Eigen::VectorXcd orthogonal(4);
  orthogonal << 0.0, 0.0, 1.0, 0.0;
  const gsc::KickbackResult miss = gsc::phase_kickback(orthogonal, 0);
  CHECK(miss.p_ground < 1e-30);
  REQUIRE(miss.post_excited.has_value());
  CHECK(std::abs((*miss.post_excited)[2]) == doctest::Approx(1.0).epsilon(1e-13));

  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(4);
  CHECK_THROWS_AS(gsc::phase_kickback(zero, 0), std::invalid_argument);
}

TEST_CASE("relabeling the answer only permutes the spectrum") {
  const std::vector<double> base =
      gsc::oracle_energies(6, 2, SpectrumModel::degenerate());
  const std::vector<double> shifted =
      gsc::oracle_energies(6, 3, SpectrumModel::degenerate());
  Eigen::VectorXd ev_base;
  Eigen::VectorXd ev_shifted;
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        gsc::build_hamiltonian(base, 0.2, 0.3));
    ev_base = solver.eigenvalues();
  }
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        gsc::build_hamiltonian(shifted, 0.2, 0.3));
    ev_shifted = solver.eigenvalues();
  }
  CHECK((ev_base - ev_shifted).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_SUITE_END();
