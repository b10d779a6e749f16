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

#include "gsc/fullsim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "gsc/random.hpp"

namespace gsc {

namespace {

std::size_t checked_size(const ThermalSpec& spec) {
  validate(spec);
  if (!enumerable(spec))
    throw std::invalid_argument(
        "the dense simulator needs an integral database size of at most "
        "4096");
  return static_cast<std::size_t>(spec.n_states);
}

// Inverse-CDF sampling; the scale guard absorbs a cumulative total slightly
// below 1 from rounding.
std::size_t sample_index(const std::vector<double>& cdf, double u) {
  const double target = u * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  const std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
  return std::min(idx, cdf.size() - 1);
}

std::vector<double> cumulative(const std::vector<double>& probabilities) {
  std::vector<double> cdf(probabilities.size());
  std::partial_sum(probabilities.begin(), probabilities.end(), cdf.begin());
  return cdf;
}

// Hadamard on the ancilla of every oracle component.
void ancilla_hadamard(Eigen::VectorXcd& amps) {
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  for (Eigen::Index k = 0; k + 1 < amps.size(); k += 2) {
    const std::complex<double> g = amps[k];
    const std::complex<double> e = amps[k + 1];
    amps[k] = (g + e) * inv_sqrt2;
    amps[k + 1] = (g - e) * inv_sqrt2;
  }
}

struct ScheduledRound {
  const HamiltonianEvolver* evolver;  // not owned
  double t;
};

// Shared ensemble sweep: evolve every thermally occupied basis state
// through the round schedule, project on the ancilla ground state after
// each round, and recombine the surviving runs with their populations.
CoolingReport conditioned_ensemble(const std::vector<double>& populations,
                                   const std::vector<ScheduledRound>& rounds,
                                   std::size_t n_states, std::size_t answer) {
  double survival = 0.0;
  double cooling_mass = 0.0;
  double fidelity_mass = 0.0;
  for (std::size_t n0 = 0; n0 < n_states; ++n0) {
    if (populations[n0] <= 0.0) continue;
    FullState psi = FullState::basis(n_states, n0, kAncillaGround);
    double record_prob = 1.0;
    for (const ScheduledRound& round : rounds) {
      psi = round.evolver->evolve(psi, round.t);
      const AncillaMeasurement m = measure_ancilla(psi);
      record_prob *= m.p_ground;
      if (!m.post_ground) {
        record_prob = 0.0;
        break;
      }
      psi = *m.post_ground;
    }
    if (record_prob <= 0.0) continue;
    const double mass = populations[n0] * record_prob;
    survival += mass;
    const double overlap_g =
        std::norm(psi.amps[joint_index(answer, kAncillaGround)]);
    const double overlap_e =
        std::norm(psi.amps[joint_index(answer, kAncillaExcited)]);
    cooling_mass += mass * overlap_g;
    fidelity_mass += mass * (overlap_g + overlap_e);
  }
  CoolingReport report;
  report.survival_probability = survival;
  report.cooling_probability = survival > 0.0 ? cooling_mass / survival : 0.0;
  report.conditional_fidelity =
      survival > 0.0 ? fidelity_mass / survival : 0.0;
  return report;
}

}  // namespace

FullState FullState::basis(std::size_t n_states, std::size_t oracle,
                           int ancilla) {
  if (n_states < 2) throw std::domain_error("need at least two oracle states");
  if (oracle >= n_states || (ancilla != kAncillaGround &&
                             ancilla != kAncillaExcited))
    throw std::invalid_argument("basis index out of range");
  FullState state;
  state.amps = Eigen::VectorXcd::Zero(2 * static_cast<Eigen::Index>(n_states));
  state.amps[static_cast<Eigen::Index>(joint_index(oracle, ancilla))] = 1.0;
  return state;
}

Eigen::MatrixXcd build_hamiltonian(const std::vector<double>& energies,
                                   double gamma, double delta) {
  const std::size_t n = energies.size();
  if (n < 2) throw std::domain_error("need at least two oracle states");
  const Eigen::Index dim = 2 * static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t k = 0; k < n; ++k) {
    h(joint_index(k, kAncillaGround), joint_index(k, kAncillaGround)) =
        energies[k] + gamma;
    h(joint_index(k, kAncillaExcited), joint_index(k, kAncillaExcited)) =
        energies[k] - gamma;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t row = joint_index(k, kAncillaExcited);
    const std::size_t col = joint_index((k + 1) % n, kAncillaGround);
    h(row, col) += delta;
    h(col, row) += delta;
  }
  return h;
}

HamiltonianEvolver::HamiltonianEvolver(const Eigen::MatrixXcd& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols())
    throw std::invalid_argument("Hamiltonian must be square");
  const double scale = std::max(1.0, hamiltonian.norm());
  if ((hamiltonian - hamiltonian.adjoint()).norm() > 1e-12 * scale)
    throw std::invalid_argument("Hamiltonian must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

FullState HamiltonianEvolver::evolve(const FullState& state, double t) const {
  if (state.amps.size() != eigenvectors_.rows())
    throw std::invalid_argument("state dimension does not match Hamiltonian");
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * state.amps;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs[k] *= std::polar(1.0, -eigenvalues_[k] * t);
  FullState out;
  out.amps = eigenvectors_ * coeffs;
  return out;
}

FullState evolve(const FullState& state, const Eigen::MatrixXcd& hamiltonian,
                 double t) {
  return HamiltonianEvolver(hamiltonian).evolve(state, t);
}

AncillaMeasurement measure_ancilla(const FullState& state) {
  const Eigen::Index dim = state.amps.size();
  if (dim < 4 || dim % 2 != 0)
    throw std::invalid_argument("not a joint oracle+ancilla state");
  double ground_mass = 0.0;
  double excited_mass = 0.0;
  for (Eigen::Index k = 0; k < dim; k += 2) {
    ground_mass += std::norm(state.amps[k]);
    excited_mass += std::norm(state.amps[k + 1]);
  }
  const double total = ground_mass + excited_mass;
  if (!(total > 0.0))
    throw std::invalid_argument("cannot measure a zero state");

  AncillaMeasurement result;
  result.p_ground = ground_mass / total;
  if (ground_mass > 0.0) {
    FullState post;
    post.amps = state.amps;
    for (Eigen::Index k = 1; k < dim; k += 2) post.amps[k] = 0.0;
    post.amps /= std::sqrt(ground_mass);
    result.post_ground = std::move(post);
  }
  if (excited_mass > 0.0) {
    FullState post;
    post.amps = state.amps;
    for (Eigen::Index k = 0; k < dim; k += 2) post.amps[k] = 0.0;
    post.amps /= std::sqrt(excited_mass);
    result.post_excited = std::move(post);
  }
  return result;
}

CoolingReport run_shot_cooling(const ThermalSpec& spec,
                               const CoolingParams& params, std::size_t answer,
                               std::uint64_t rounds) {
  const std::size_t n = checked_size(spec);
  if (answer >= n) throw std::invalid_argument("answer index out of range");
  const std::vector<double> energies =
      oracle_energies(n, answer, spec.spectrum);
  const std::vector<double> populations = state_populations(spec, energies);

  const HamiltonianEvolver evolver(
      build_hamiltonian(energies, params.gamma, params.delta));
  std::vector<ScheduledRound> schedule(rounds, {&evolver, params.t});
  return conditioned_ensemble(populations, schedule, n, answer);
}

CoolingReport run_shot_strategy_one(const ThermalSpec& spec,
                                    const StrategyOneConfig& config,
                                    std::size_t answer) {
  const std::size_t n = checked_size(spec);
  if (answer >= n) throw std::invalid_argument("answer index out of range");
  if (spec.spectrum.split)
    throw std::invalid_argument(
        "the two-round schedule assumes a degenerate excited manifold");
  if (!(config.delta1 > 0.0) || !(config.delta2 > 0.0))
    throw std::domain_error("couplings must be positive");
  const std::vector<double> energies =
      oracle_energies(n, answer, spec.spectrum);
  const std::vector<double> populations = state_populations(spec, energies);

  const double t1 = (0.5 + static_cast<double>(config.j1)) * std::numbers::pi /
                    config.delta1;
  const double t2 = (0.5 + static_cast<double>(config.j2)) * std::numbers::pi /
                    config.delta2;
  const HamiltonianEvolver round1(
      build_hamiltonian(energies, 0.0, config.delta1));
  const HamiltonianEvolver round2(
      build_hamiltonian(energies, -0.5, config.delta2));
  const std::vector<ScheduledRound> schedule = {{&round1, t1}, {&round2, t2}};
  return conditioned_ensemble(populations, schedule, n, answer);
}

double TrajectoryStats::empirical_survival() const {
  return attempts == 0 ? 0.0
                       : static_cast<double>(successes) /
                             static_cast<double>(attempts);
}

double TrajectoryStats::empirical_fidelity() const {
  return successes == 0 ? 0.0
                        : static_cast<double>(answer_hits) /
                              static_cast<double>(successes);
}

TrajectoryStats monte_carlo(const ThermalSpec& spec,
                            const CoolingParams& params, std::size_t answer,
                            std::uint64_t rounds,
                            const MonteCarloOptions& options) {
  const std::size_t n = checked_size(spec);
  if (answer >= n) throw std::invalid_argument("answer index out of range");
  if (options.trials == 0)
    throw std::invalid_argument("at least one trial is required");
  if (options.max_attempts == 0)
    throw std::invalid_argument("the per-trial reset budget must be positive");

  const std::vector<double> energies =
      oracle_energies(n, answer, spec.spectrum);
  const std::vector<double> initial_cdf =
      cumulative(state_populations(spec, energies));
  const HamiltonianEvolver evolver(
      build_hamiltonian(energies, params.gamma, params.delta));

  TrajectoryStats stats;
  stats.trials = options.trials;
  std::vector<double> readout_probs(n);
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    // Per-trial streams keep runs reproducible independent of ordering.
    std::mt19937_64 rng = trajectory_engine(options.seed, trial);
    std::uint64_t resets = 0;
    std::uint64_t measurements = 0;
    bool success = false;
    FullState psi;
    while (!success && resets < options.max_attempts) {
      ++stats.attempts;
      psi = FullState::basis(n, sample_index(initial_cdf, uniform_unit(rng)),
                             kAncillaGround);
      bool survived = true;
      for (std::uint64_t r = 0; r < rounds; ++r) {
        psi = evolver.evolve(psi, params.t);
        const AncillaMeasurement m = measure_ancilla(psi);
        ++measurements;
        if (uniform_unit(rng) < m.p_ground) {
          psi = *m.post_ground;
        } else {
          survived = false;
          break;
        }
      }
      if (survived)
        success = true;
      else
        ++resets;
    }
    if (success) {
      ++stats.successes;
      for (std::size_t k = 0; k < n; ++k)
        readout_probs[k] =
            std::norm(psi.amps[joint_index(k, kAncillaGround)]) +
            std::norm(psi.amps[joint_index(k, kAncillaExcited)]);
      const std::size_t readout =
          sample_index(cumulative(readout_probs), uniform_unit(rng));
      if (readout == answer) ++stats.answer_hits;
    }
    ++stats.resets_histogram[resets];
    ++stats.measurements_histogram[measurements];
  }
  return stats;
}

KickbackResult phase_kickback(const Eigen::VectorXcd& oracle_state,
                              std::size_t answer) {
  const std::size_t n = static_cast<std::size_t>(oracle_state.size());
  if (n < 2) throw std::domain_error("need at least two oracle states");
  if (answer >= n) throw std::invalid_argument("answer index out of range");
  const double nrm = oracle_state.norm();
  if (!(nrm > 0.0))
    throw std::invalid_argument("state must have positive norm");

  FullState joint;
  joint.amps = Eigen::VectorXcd::Zero(2 * static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k)
    joint.amps[joint_index(k, kAncillaGround)] = oracle_state[k] / nrm;

  // Hadamard, oracle-phase propagator exp(-i pi H0) in the excited sector,
  // Hadamard. The answer picks up no phase; every excited state flips sign.
  const std::vector<double> energies =
      oracle_energies(n, answer, SpectrumModel::degenerate());
  ancilla_hadamard(joint.amps);
  for (std::size_t k = 0; k < n; ++k)
    joint.amps[joint_index(k, kAncillaExcited)] *=
        std::polar(1.0, -std::numbers::pi * energies[k]);
  ancilla_hadamard(joint.amps);

  const AncillaMeasurement m = measure_ancilla(joint);
  KickbackResult result;
  result.p_ground = m.p_ground;
  const auto oracle_part = [n](const FullState& state, int ancilla) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k)
      v[k] = state.amps[joint_index(k, ancilla)];
    return v;
  };
  if (m.post_ground)
    result.post_ground = oracle_part(*m.post_ground, kAncillaGround);
  if (m.post_excited)
    result.post_excited = oracle_part(*m.post_excited, kAncillaExcited);
  return result;
}

}  // namespace gsc
