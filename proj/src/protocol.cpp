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

#include "gsc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace gsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Natural-log weight exponents log(W_i) + m log(b_i); -inf marks a group
// whose conditioned weight is exactly zero after m rounds.
std::vector<double> log_exponents(const WeightState& state, std::uint64_t m) {
  std::vector<double> lw(state.groups.size(), -kInf);
  for (std::size_t i = 0; i < state.groups.size(); ++i) {
    const WeightGroup& g = state.groups[i];
    if (g.weight > 0.0 && g.b > 0.0)
      lw[i] = std::log(g.weight) +
              static_cast<double>(m) * std::log(g.b);
  }
  return lw;
}

}  // namespace

double WeightState::total_weight() const {
  double sum = 0.0;
  for (const WeightGroup& g : groups) sum += g.weight * g.multiplicity;
  return sum;
}

WeightState initial_weights(const ThermalSpec& spec,
                            const CoolingParams& params) {
  const std::vector<BlockClass> classes = block_classes(spec);
  double z = 0.0;
  for (const BlockClass& c : classes) z += c.unnorm_weight * c.multiplicity;

  WeightState state;
  state.groups.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const BlockClass& c = classes[i];
    const double weight = c.unnorm_weight / z;
    // Dead groups would only pollute the recursion; the answer group stays
    // as the fixed first entry whatever its weight.
    if (i > 0 && (weight <= 0.0 || c.multiplicity <= 0.0)) continue;
    const TwoLevelBlock block =
        generalized_block(c.e_left, c.e_right, params.gamma, params.delta);
    state.groups.push_back(
        {weight, survival_prob(block, params.t), c.multiplicity});
  }
  return state;
}

WeightState step(const WeightState& state) {
  double round_survival = 0.0;
  for (const WeightGroup& g : state.groups)
    round_survival += g.weight * g.b * g.multiplicity;
  if (!(round_survival > 0.0))
    throw ZeroSurvival(
        "every block is filtered out; the all-ground record has probability "
        "zero");

  WeightState next;
  next.groups.reserve(state.groups.size());
  for (const WeightGroup& g : state.groups)
    next.groups.push_back({g.weight * g.b / round_survival, g.b,
                           g.multiplicity});
  next.survival = state.survival * round_survival;
  next.m_done = state.m_done + 1;
  return next;
}

WeightState weights_after(const WeightState& state, std::uint64_t m) {
  if (m == 0) return state;
  const std::vector<double> lw = log_exponents(state, m);
  const double lmax = *std::max_element(lw.begin(), lw.end());
  if (lmax == -kInf)
    throw ZeroSurvival(
        "every block is filtered out; the all-ground record has probability "
        "zero");

  double denom = 0.0;
  for (std::size_t i = 0; i < lw.size(); ++i)
    if (lw[i] != -kInf)
      denom += state.groups[i].multiplicity * std::exp(lw[i] - lmax);

  WeightState next;
  next.groups.reserve(state.groups.size());
  for (std::size_t i = 0; i < lw.size(); ++i) {
    const double w = lw[i] == -kInf ? 0.0 : std::exp(lw[i] - lmax) / denom;
    next.groups.push_back({w, state.groups[i].b, state.groups[i].multiplicity});
  }
  // The m-round survival factor exp(lmax) * denom can underflow to zero for
  // astronomically unlikely records; the weights above are unaffected.
  next.survival = state.survival * std::exp(lmax) * denom;
  next.m_done = state.m_done + m;
  return next;
}

std::uint64_t min_measurements(const ThermalSpec& spec,
                               const CoolingParams& params, double p_target) {
  if (!(p_target > 0.0 && p_target < 1.0))
    throw std::domain_error("p_target must lie in (0, 1)");
  const WeightState start = initial_weights(spec, params);
  if (start.cooling_probability() >= p_target) return 0;

  // The answer weight converges to w0 / (total weight of groups tied at the
  // answer's b); every group with smaller b vanishes, any with larger b
  // takes over. The target is reachable iff that limit exceeds it.
  const double b0 = start.groups.front().b;
  double tied = 0.0;
  for (std::size_t i = 1; i < start.groups.size(); ++i) {
    const WeightGroup& g = start.groups[i];
    if (g.b > b0)
      throw UnreachableTarget(
          "a competing block out-survives the answer block; cooling cannot "
          "reach the target");
    if (g.b == b0) tied += g.weight * g.multiplicity;
  }
  if (b0 <= 0.0)
    throw UnreachableTarget(
        "the answer block is filtered out by the first round");
  const double w0 = start.cooling_probability();
  if (!(w0 / (w0 + tied) > p_target))
    throw UnreachableTarget(
        "competing blocks tie the answer block's survival; the target "
        "exceeds the limiting answer weight");

  // The answer weight is nondecreasing in the round count here, so bracket
  // by doubling and close in with binary search.
  std::uint64_t hi = 1;
  while (weights_after(start, hi).cooling_probability() < p_target) {
    if (hi > (std::uint64_t{1} << 62))
      throw UnreachableTarget("target not reached within 2^62 rounds");
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;  // cooling(lo) < target <= cooling(hi)
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (weights_after(start, mid).cooling_probability() < p_target)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

double measurement_bound(const ThermalSpec& spec, double b2, double p_target) {
  const double a = boltzmann_factor(spec);
  if (!(b2 > 0.0 && b2 < 1.0))
    throw BoundInvalid("generic-block survival must lie in (0, 1)");
  if (!(p_target > 0.0))
    throw std::domain_error("p_target must be positive");
  const double denom = 1.0 - p_target - a * p_target;
  if (!(denom > 0.0))
    throw BoundInvalid(
        "the closed-form round estimate needs p_target below 1 / (1 + a)");
  const double rounds =
      std::log(p_target * spec.n_states / denom) / std::log(1.0 / b2);
  return std::max(0.0, rounds);
}

double copies_success(double p_single, std::uint64_t copies) {
  if (!(p_single >= 0.0 && p_single <= 1.0))
    throw std::domain_error("per-copy success probability must lie in [0, 1]");
  if (copies == 0) return 0.0;
  // 1 - (1 - p)^K, evaluated so that tiny p and huge K keep full precision.
  return -std::expm1(static_cast<double>(copies) * std::log1p(-p_single));
}

std::uint64_t copies_needed(double p_single, double p_target) {
  if (!(p_target > 0.0 && p_target < 1.0))
    throw std::domain_error("p_target must lie in (0, 1)");
  if (!(p_single > 0.0 && p_single <= 1.0))
    throw UnreachableTarget(
        "per-copy success probability must be positive to reach any target");
  if (p_single == 1.0) return 1;
  double guess = std::ceil(std::log1p(-p_target) / std::log1p(-p_single));
  std::uint64_t k = guess < 1.0 ? 1 : static_cast<std::uint64_t>(guess);
  while (copies_success(p_single, k) < p_target) ++k;
  while (k > 1 && copies_success(p_single, k - 1) >= p_target) --k;
  return k;
}

StrategyOneReport strategy_one(const ThermalSpec& spec,
                               const StrategyOneConfig& config) {
  validate(spec);
  if (spec.spectrum.split)
    throw std::invalid_argument(
        "the two-round schedule assumes a degenerate excited manifold");
  if (!(config.delta1 > 0.0) || !(config.delta2 > 0.0))
    throw std::domain_error("couplings must be positive");

  const double t1 =
      (0.5 + static_cast<double>(config.j1)) * std::numbers::pi / config.delta1;
  const double t2 =
      (0.5 + static_cast<double>(config.j2)) * std::numbers::pi / config.delta2;

  const double b0_1 =
      survival_prob(block_for_type(BlockType::Answer, 0.0, config.delta1), t1);
  const double b0_2 = survival_prob(
      block_for_type(BlockType::Answer, -0.5, config.delta2), t2);
  const double b2_2 = survival_prob(
      block_for_type(BlockType::Generic, -0.5, config.delta2), t2);

  // Round one, gamma = 0: every generic block is a full swap at
  // delta1 t1 = pi/2 + pi j1, so its survival is analytically zero (the
  // computed value is only zero to roundoff). Pinning it keeps the
  // conditioned weights exact.
  WeightState s0 = initial_weights(spec, CoolingParams{0.0, config.delta1, t1});
  for (std::size_t i = 2; i < s0.groups.size(); ++i) s0.groups[i].b = 0.0;
  const WeightState after1 = step(s0);

  // Round two, gamma = -1/2: now the neighbor block is the full swap.
  WeightState s1 = after1;
  s1.groups[0].b = b0_2;
  if (s1.groups.size() > 1) s1.groups[1].b = 0.0;
  for (std::size_t i = 2; i < s1.groups.size(); ++i) s1.groups[i].b = b2_2;
  const WeightState after2 = step(s1);

  StrategyOneReport result;
  result.report.cooling_probability = after2.cooling_probability();
  result.report.survival_probability = after2.survival;
  result.report.conditional_fidelity = after2.cooling_probability();
  result.report.trace = {s0, s1, after2};
  result.b0_step1 = b0_1;
  result.b0_step2 = b0_2;
  result.p_success = ground_state_population(spec) * b0_1 * b0_2;

  // Simplified estimate: treats the answer block of both rounds as having
  // half-splitting 1/2, which is only true in round one; round two actually
  // retains more (half-splitting 1 at gamma = -1/2). Reported alongside the
  // exact value because the estimate is the commonly quoted one.
  const auto round_factor = [](double delta, double t) {
    const double w = std::hypot(0.5, delta);
    const double s = std::sin(w * t);
    const double c = std::cos(w * t);
    return c * c + (0.25 / (delta * delta + 0.25)) * s * s;
  };
  result.approx_p_success = ground_state_population(spec) *
                            round_factor(config.delta1, t1) *
                            round_factor(config.delta2, t2);
  return result;
}

double gap_model_probability(const ThermalSpec& spec,
                             const CoolingParams& params, std::uint64_t m) {
  return weights_after(initial_weights(spec, params), m)
      .cooling_probability();
}

double min_gap_probability(const ThermalSpec& spec, const CoolingParams& params,
                           std::uint64_t m, double r) {
  double min_prob = kInf;
  for (LevelLabel before : {LevelLabel::Low, LevelLabel::High}) {
    for (LevelLabel after : {LevelLabel::Low, LevelLabel::High}) {
      for (BulkPattern bulk : {BulkPattern::AllLow, BulkPattern::AllHigh,
                               BulkPattern::Alternating}) {
        ThermalSpec candidate = spec;
        candidate.spectrum =
            SpectrumModel::split_spectrum(r, before, after, bulk);
        min_prob =
            std::min(min_prob, gap_model_probability(candidate, params, m));
      }
    }
  }
  return min_prob;
}

}  // namespace gsc
