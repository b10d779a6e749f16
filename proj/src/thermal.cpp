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

#include "gsc/thermal.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gsc {

namespace {

constexpr double kMaxEnumerable = 4096.0;

// Thermal weight of a single oracle state with the given energy, relative to
// the answer state (weight 1 at energy 0). With p0_override the "weights"
// are the already-normalized populations: the answer is the only state at
// energy 0, every other state shares the remainder uniformly.
double state_weight(const ThermalSpec& spec, double energy) {
  if (spec.p0_override) {
    if (energy == 0.0) return *spec.p0_override;
    return (1.0 - *spec.p0_override) / (spec.n_states - 1.0);
  }
  return std::exp(-energy * std::log(spec.n_states) / (1.0 + spec.dT_ratio));
}

// Aggregate partition for databases too large (or non-integral) to
// enumerate. Walking the ring from the answer: answer block, neighbor
// block, first bulk block after the neighbor, the interior bulk, and the
// block closing the ring back onto |w-1>. The alternating interior follows
// the even-size layout (the parity of a ~1e23-state ring is immaterial); it
// reproduces the enumerated partition exactly for even sizes.
std::vector<BlockClass> aggregate_classes(const ThermalSpec& spec) {
  const SpectrumModel& sm = spec.spectrum;
  const double n = spec.n_states;
  const double e_before = sm.split ? sm.level_energy(sm.before_answer) : 1.0;
  const double e_after = sm.split ? sm.level_energy(sm.after_answer) : 1.0;

  std::vector<BlockClass> classes;
  classes.push_back({state_weight(spec, 0.0), e_before, 0.0, 1.0});
  classes.push_back({state_weight(spec, e_after), 0.0, e_after, 1.0});
  if (!sm.split) {
    if (n > 2.0)
      classes.push_back({state_weight(spec, 1.0), 1.0, 1.0, n - 2.0});
    return classes;
  }

  const double lo = sm.level_energy(LevelLabel::Low);
  const double hi = sm.level_energy(LevelLabel::High);
  double bulk_last = lo;
  switch (sm.bulk) {
    case BulkPattern::AllLow:
      classes.push_back({state_weight(spec, lo), e_after, lo, 1.0});
      classes.push_back({state_weight(spec, lo), lo, lo, n - 4.0});
      break;
    case BulkPattern::AllHigh:
      bulk_last = hi;
      classes.push_back({state_weight(spec, hi), e_after, hi, 1.0});
      classes.push_back({state_weight(spec, hi), hi, hi, n - 4.0});
      break;
    case BulkPattern::Alternating:
      classes.push_back({state_weight(spec, lo), e_after, lo, 1.0});
      classes.push_back({state_weight(spec, hi), lo, hi, 0.5 * (n - 4.0)});
      classes.push_back({state_weight(spec, lo), hi, lo, 0.5 * (n - 4.0)});
      break;
  }
  classes.push_back({state_weight(spec, e_before), bulk_last, e_before, 1.0});
  return classes;
}

}  // namespace

SpectrumModel SpectrumModel::split_spectrum(double r, LevelLabel before_answer,
                                            LevelLabel after_answer,
                                            BulkPattern bulk) {
  SpectrumModel sm;
  sm.split = true;
  sm.r = r;
  sm.before_answer = before_answer;
  sm.after_answer = after_answer;
  sm.bulk = bulk;
  return sm;
}

void validate(const ThermalSpec& spec) {
  if (!std::isfinite(spec.n_states) || spec.n_states < 2.0)
    throw std::domain_error("n_states must be finite and at least 2");
  if (spec.p0_override) {
    const double p0 = *spec.p0_override;
    if (!std::isfinite(p0) || p0 <= 0.0 || p0 > 1.0)
      throw std::domain_error("p0 must lie in (0, 1]");
  } else if (!std::isfinite(spec.dT_ratio) || spec.dT_ratio < 0.0) {
    throw std::domain_error("dT_ratio must be finite and non-negative");
  }
  if (spec.spectrum.split) {
    const double r = spec.spectrum.r;
    if (!std::isfinite(r) || r < 0.0 || r >= 1.0)
      throw std::domain_error("spectrum half-width r must lie in [0, 1)");
    if (!enumerable(spec) && spec.n_states < 6.0)
      throw std::domain_error(
          "split spectrum needs an enumerable database or n_states >= 6");
  }
}

bool enumerable(const ThermalSpec& spec) {
  return spec.n_states >= 2.0 && spec.n_states <= kMaxEnumerable &&
         std::floor(spec.n_states) == spec.n_states;
}

double boltzmann_factor(const ThermalSpec& spec) {
  validate(spec);
  if (spec.p0_override)
    throw std::invalid_argument(
        "boltzmann_factor is undefined with a direct p0 override");
  return std::exp(-std::log(spec.n_states) / (1.0 + spec.dT_ratio));
}

double characteristic_temperature(double epsilon, double n_states,
                                  double boltzmann_k) {
  if (!(epsilon > 0.0) || !(boltzmann_k > 0.0))
    throw std::domain_error("epsilon and k must be positive");
  if (!(n_states > 1.0))
    throw std::domain_error("n_states must exceed 1");
  return epsilon / (boltzmann_k * std::log(n_states));
}

double ground_state_population(const ThermalSpec& spec) {
  const std::vector<BlockClass> classes = block_classes(spec);
  double z = 0.0;
  for (const BlockClass& c : classes) z += c.unnorm_weight * c.multiplicity;
  return classes.front().unnorm_weight / z;
}

double excited_state_population(const ThermalSpec& spec) {
  validate(spec);
  if (spec.spectrum.split && !spec.p0_override)
    throw std::invalid_argument(
        "excited_state_population requires a degenerate spectrum");
  return (1.0 - ground_state_population(spec)) / (spec.n_states - 1.0);
}

std::vector<double> oracle_energies(std::size_t n_states, std::size_t answer,
                                    const SpectrumModel& model) {
  if (n_states < 2) throw std::domain_error("n_states must be at least 2");
  if (answer >= n_states)
    throw std::invalid_argument("answer index out of range");
  std::vector<double> energies(n_states, 1.0);
  energies[answer] = 0.0;
  if (!model.split) return energies;

  const double lo = model.level_energy(LevelLabel::Low);
  const double hi = model.level_energy(LevelLabel::High);
  for (std::size_t k = 1; k < n_states; ++k) {
    const std::size_t pos = (answer + k) % n_states;
    if (k == 1) {
      energies[pos] = model.level_energy(model.after_answer);
    } else if (k == n_states - 1) {
      energies[pos] = model.level_energy(model.before_answer);
    } else {
      switch (model.bulk) {
        case BulkPattern::AllLow:
          energies[pos] = lo;
          break;
        case BulkPattern::AllHigh:
          energies[pos] = hi;
          break;
        case BulkPattern::Alternating:
          energies[pos] = (k % 2 == 0) ? lo : hi;
          break;
      }
    }
  }
  return energies;
}

std::vector<double> state_populations(const ThermalSpec& spec,
                                      const std::vector<double>& energies) {
  validate(spec);
  std::vector<double> pops(energies.size());
  double z = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    pops[i] = state_weight(spec, energies[i]);
    z += pops[i];
  }
  for (double& p : pops) p /= z;
  return pops;
}

std::vector<BlockClass> block_classes(const ThermalSpec& spec) {
  validate(spec);
  // The degenerate partition is exact at any size; only an enumerable split
  // spectrum needs the state-by-state walk.
  if (!spec.spectrum.split || !enumerable(spec))
    return aggregate_classes(spec);

  const std::size_t n = static_cast<std::size_t>(spec.n_states);
  const std::size_t answer = 0;  // class structure is answer-position free
  const std::vector<double> energies =
      oracle_energies(n, answer, spec.spectrum);

  std::vector<BlockClass> classes;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t g_state = (answer + i) % n;
    const std::size_t e_state = (g_state + n - 1) % n;
    const double e_left = energies[e_state];
    const double e_right = energies[g_state];
    const double w = state_weight(spec, e_right);
    bool merged = false;
    for (BlockClass& c : classes) {
      if (c.e_left == e_left && c.e_right == e_right) {
        c.multiplicity += 1.0;
        merged = true;
        break;
      }
    }
    if (!merged) classes.push_back({w, e_left, e_right, 1.0});
  }
  return classes;
}

}  // namespace gsc
