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

#ifndef GSC_FULLSIM_HPP
#define GSC_FULLSIM_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gsc/protocol.hpp"
#include "gsc/thermal.hpp"

// Brute-force reference simulator: the joint oracle+ancilla system as one
// dense 2N x 2N Hermitian problem, evolved by eigendecomposition. Nothing
// here knows about the 2x2 block structure; agreement with the analytic
// pipeline is therefore a real cross-check, not a tautology.

namespace gsc {

/// Ancilla ground component; the excited component is kAncillaExcited.
inline constexpr int kAncillaGround = 0;
inline constexpr int kAncillaExcited = 1;

/// Amplitude position of |oracle, ancilla>.
inline std::size_t joint_index(std::size_t oracle, int ancilla) {
  return 2 * oracle + static_cast<std::size_t>(ancilla);
}

/// Pure state of the joint system, amplitudes indexed by joint_index.
struct FullState {
  Eigen::VectorXcd amps;

  std::size_t oracle_states() const {
    return static_cast<std::size_t>(amps.size()) / 2;
  }
  double norm() const { return amps.norm(); }

  static FullState basis(std::size_t n_states, std::size_t oracle,
                         int ancilla);
};

/// Dense joint Hamiltonian: oracle energies in both ancilla sectors, the
/// ancilla bias (+gamma on ground, -gamma on excited), and the exchange
/// coupling delta |n, e><n+1 mod N, g| + h.c.
Eigen::MatrixXcd build_hamiltonian(const std::vector<double>& energies,
                                   double gamma, double delta);

/// exp(-i H t) applied through the spectral decomposition of H; reusable
/// across many times and states for one Hamiltonian.
class HamiltonianEvolver {
 public:
  explicit HamiltonianEvolver(const Eigen::MatrixXcd& hamiltonian);

  FullState evolve(const FullState& state, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// One-off convenience wrapper around HamiltonianEvolver.
FullState evolve(const FullState& state, const Eigen::MatrixXcd& hamiltonian,
                 double t);

/// Projective ancilla measurement: ground-outcome probability and the
/// normalized post-measurement states. A sector with zero weight has no
/// post state.
struct AncillaMeasurement {
  double p_ground = 0.0;
  std::optional<FullState> post_ground;
  std::optional<FullState> post_excited;
};

AncillaMeasurement measure_ancilla(const FullState& state);

/// Exact conditioned run over the full thermal ensemble: every initial
/// basis state is evolved and projected for `rounds` rounds; outcomes are
/// combined with their thermal populations. The database must be
/// enumerable. The report's trace is left empty (the analytic pipeline is
/// the one that exposes traces).
CoolingReport run_shot_cooling(const ThermalSpec& spec,
                               const CoolingParams& params, std::size_t answer,
                               std::uint64_t rounds);

/// Dense counterpart of the two-round swap schedule.
CoolingReport run_shot_strategy_one(const ThermalSpec& spec,
                                    const StrategyOneConfig& config,
                                    std::size_t answer);

/// Trajectory tallies. One trial samples a thermal initial state and
/// repeats the conditioned run until it survives all rounds, resetting on
/// any excited outcome, up to max_attempts. All histograms are keyed by
/// count and sum to the number of trials.
struct TrajectoryStats {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t attempts = 0;     ///< every started run, successful or not
  std::uint64_t answer_hits = 0;  ///< successes whose final readout was |w>
  std::map<std::uint64_t, std::uint64_t> resets_histogram;
  std::map<std::uint64_t, std::uint64_t> measurements_histogram;

  /// Fraction of attempts that survived every round; estimates the
  /// analytic survival probability.
  double empirical_survival() const;
  /// Fraction of successful runs that read out the answer; estimates the
  /// analytic cooling probability.
  double empirical_fidelity() const;
};

struct MonteCarloOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::uint64_t max_attempts = 100000;  ///< per-trial reset budget
};

TrajectoryStats monte_carlo(const ThermalSpec& spec,
                            const CoolingParams& params, std::size_t answer,
                            std::uint64_t rounds,
                            const MonteCarloOptions& options);

/// One-measurement readout for a known answer: Hadamard on the ancilla,
/// oracle phase exp(-i pi H0) applied in the excited sector, Hadamard
/// again, then an ancilla measurement. The ground outcome has probability
/// |<w|psi>|^2 and leaves the oracle exactly in |w>.
struct KickbackResult {
  double p_ground = 0.0;
  std::optional<Eigen::VectorXcd> post_ground;
  std::optional<Eigen::VectorXcd> post_excited;
};

KickbackResult phase_kickback(const Eigen::VectorXcd& oracle_state,
                              std::size_t answer);

}  // namespace gsc

#endif
