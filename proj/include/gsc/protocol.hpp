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

#ifndef GSC_PROTOCOL_HPP
#define GSC_PROTOCOL_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gsc/blockmath.hpp"
#include "gsc/thermal.hpp"

namespace gsc {

/// One cooling round: evolve the joint system for time t under ancilla bias
/// gamma and coupling delta, then keep the run only if the ancilla is
/// measured in its ground state.
struct CoolingParams {
  double gamma = 0.0;
  double delta = 0.0;
  double t = 0.0;
};

/// The requested cooling probability can never be reached: the answer block
/// does not strictly out-survive every other block.
class UnreachableTarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The closed-form measurement-count bound does not apply to these inputs.
class BoundInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every block is filtered out completely; the conditioned state after the
/// next measurement would have probability zero.
class ZeroSurvival : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One class of identical blocks in the conditioned ensemble: its current
/// per-block weight, its single-round all-ground survival b, and how many
/// blocks share these numbers.
struct WeightGroup {
  double weight = 0.0;
  double b = 1.0;
  double multiplicity = 1.0;
};

/// Conditioned ensemble after m_done all-ground measurement rounds.
/// groups[0] is always the answer block. The per-block weights times their
/// multiplicities sum to 1; survival is the probability of having seen
/// all-ground outcomes in every round so far.
struct WeightState {
  std::vector<WeightGroup> groups;
  double survival = 1.0;
  std::uint64_t m_done = 0;

  /// Probability that the conditioned register sits in the answer block.
  double cooling_probability() const {
    return groups.empty() ? 0.0 : groups.front().weight;
  }
  double total_weight() const;
};

/// Thermal starting weights with per-group survivals for the given round
/// parameters. Zero-weight groups are dropped; the answer group is kept
/// even if its weight underflows.
WeightState initial_weights(const ThermalSpec& spec,
                            const CoolingParams& params);

/// One conditioned round: scale every group by its b, renormalize, multiply
/// the running survival by the round's success probability.
/// Throws ZeroSurvival if that probability is exactly zero.
WeightState step(const WeightState& state);

/// m conditioned rounds at once via the closed form
///   W_i(m) = W_i(0) b_i^m / sum_j W_j(0) b_j^m mult_j,
/// evaluated with log-domain exponents so that b^m far below the smallest
/// normal double still yields correct weights. Agrees with repeated step()
/// to ~1e-13 and costs O(groups) regardless of m.
WeightState weights_after(const WeightState& state, std::uint64_t m);

/// Smallest number of all-ground rounds after which the answer weight
/// reaches p_target. Returns 0 when the thermal state already qualifies.
/// Throws UnreachableTarget when no number of rounds can reach it.
std::uint64_t min_measurements(const ThermalSpec& spec,
                               const CoolingParams& params, double p_target);

/// Closed-form upper estimate of the rounds needed to reach answer weight
/// p_target against N - 2 generic blocks of survival b2:
///   M_p = log(P N / (1 - P - a P)) / log(1 / b2),
/// clamped at 0. Requires the temperature model (a = Boltzmann factor),
/// b2 in (0, 1), and p_target below 1 / (1 + a); throws BoundInvalid
/// otherwise. The estimate ignores the neighbor block, which decays no
/// slower than the generic ones at the parameters this library optimizes.
double measurement_bound(const ThermalSpec& spec, double b2, double p_target);

/// Probability that at least one of `copies` independent runs succeeds.
double copies_success(double p_single, std::uint64_t copies);

/// Smallest number of independent runs with per-run success p_single whose
/// combined success probability reaches p_target.
std::uint64_t copies_needed(double p_single, double p_target);

/// Two-round swap schedule: round one at gamma = 0 for time
/// t1 = (pi/2 + pi j1) / delta1 empties every generic block; round two at
/// gamma = -1/2 for time t2 = (pi/2 + pi j2) / delta2 empties the neighbor
/// block. Conditioned on two ground outcomes the register is exactly the
/// answer state.
struct StrategyOneConfig {
  double delta1 = 0.1;
  double delta2 = 0.1;
  unsigned j1 = 0;
  unsigned j2 = 0;
};

/// Outcome of a conditioned cooling run.
struct CoolingReport {
  double cooling_probability = 0.0;   ///< answer weight of the final state
  double survival_probability = 0.0;  ///< chance of the all-ground record
  double conditional_fidelity = 0.0;  ///< answer overlap given survival
  std::vector<WeightState> trace;     ///< states after 0, 1, ..., M rounds
};

struct StrategyOneReport {
  CoolingReport report;
  double p_success = 0.0;  ///< p0 * b0(round 1) * b0(round 2), exact
  /// Simplified estimate that applies the round-one answer splitting to both
  /// rounds; kept for comparison, it understates p_success in round two.
  double approx_p_success = 0.0;
  double b0_step1 = 0.0;
  double b0_step2 = 0.0;
};

/// Exact two-round analysis. Requires a degenerate spectrum and positive
/// couplings; the conditional fidelity is 1 by construction.
StrategyOneReport strategy_one(const ThermalSpec& spec,
                               const StrategyOneConfig& config);

/// Answer weight after m rounds for the spec's own spectrum model.
double gap_model_probability(const ThermalSpec& spec,
                             const CoolingParams& params, std::uint64_t m);

/// Worst-case answer weight after m rounds over every split-spectrum
/// placement at half-width r: both choices for each level adjacent to the
/// answer and all three bulk patterns. Reduces to the degenerate result at
/// r = 0.
double min_gap_probability(const ThermalSpec& spec, const CoolingParams& params,
                           std::uint64_t m, double r);

}  // namespace gsc

#endif
