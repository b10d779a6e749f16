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

#ifndef GSC_THERMAL_HPP
#define GSC_THERMAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace gsc {

/// Which of the two excitation energies 1 -+ r a level sits at.
enum class LevelLabel { Low, High };

/// Placement of low/high levels over the bulk of the excited manifold.
enum class BulkPattern { AllLow, AllHigh, Alternating };

/// Oracle spectrum model. The answer |w> always has energy 0. In the
/// degenerate model every other state has energy 1. In the split model the
/// excited manifold is spread over 1 - r and 1 + r; what matters for the
/// protocol is which level the two states adjacent to the answer occupy and
/// how the two levels are distributed over the bulk.
struct SpectrumModel {
  bool split = false;
  double r = 0.0;  ///< half-width of the excited manifold, 0 <= r < 1
  LevelLabel before_answer = LevelLabel::Low;  ///< label of |w-1>
  LevelLabel after_answer = LevelLabel::Low;   ///< label of |w+1>
  BulkPattern bulk = BulkPattern::AllLow;

  static SpectrumModel degenerate() { return SpectrumModel{}; }
  static SpectrumModel split_spectrum(double r, LevelLabel before_answer,
                                      LevelLabel after_answer,
                                      BulkPattern bulk);

  double level_energy(LevelLabel label) const {
    return label == LevelLabel::Low ? 1.0 - r : 1.0 + r;
  }
};

/// Thermal preparation of the oracle register. n_states is real-valued so
/// that astronomically large databases (N ~ 1e23) can be analyzed without
/// enumerating them; integral n_states <= 4096 is treated exactly.
struct ThermalSpec {
  double n_states = 2.0;
  double dT_ratio = 0.0;  ///< deltaT / T0, deviation above the characteristic
                          ///< temperature; 0 means T = T0
  std::optional<double> p0_override;  ///< direct ground population in (0, 1];
                                      ///< bypasses the temperature model
  SpectrumModel spectrum = SpectrumModel::degenerate();
};

/// Throws std::domain_error / std::invalid_argument on out-of-range fields.
void validate(const ThermalSpec& spec);

/// True when the database is small enough to enumerate state by state.
bool enumerable(const ThermalSpec& spec);

/// Boltzmann factor per unit energy, a = N^(-1 / (1 + dT_ratio)).
/// Requires the temperature model (no p0_override).
double boltzmann_factor(const ThermalSpec& spec);

/// Characteristic temperature T0 = epsilon / (k ln N): the temperature at
/// which the thermal ground population of a degenerate-spectrum database
/// equals 1/2 up to O(1/N) corrections.
double characteristic_temperature(double epsilon, double n_states,
                                  double boltzmann_k);

/// Ground (answer) population of the Gibbs state, p0 = 1 / (1 + (N-1) a)
/// for the degenerate spectrum.
double ground_state_population(const ThermalSpec& spec);

/// Per-state population of one excited level of the degenerate spectrum,
/// (1 - p0) / (N - 1).
double excited_state_population(const ThermalSpec& spec);

/// Oracle energies for an enumerated database: energies[answer] = 0, all
/// other entries drawn from the spectrum model, walking the ring outward
/// from the answer (bulk positions 2 .. N-2 alternate starting from Low
/// when the pattern is Alternating).
std::vector<double> oracle_energies(std::size_t n_states, std::size_t answer,
                                    const SpectrumModel& model);

/// Normalized Gibbs populations for the given per-state energies, or the
/// uniform-excited populations when p0_override is set.
std::vector<double> state_populations(const ThermalSpec& spec,
                                      const std::vector<double>& energies);

/// One class of identical 2x2 blocks: every block pairs the excited-ancilla
/// component of one oracle state (energy e_left) with the ground-ancilla
/// component of the next state on the ring (energy e_right). unnorm_weight
/// is the Boltzmann weight of the ground-ancilla state before normalization.
struct BlockClass {
  double unnorm_weight = 0.0;
  double e_left = 0.0;
  double e_right = 0.0;
  double multiplicity = 1.0;
};

/// Partition of all N blocks into classes of identical (e_left, e_right)
/// pairs with their thermal weights. Entry 0 is always the answer block.
/// Enumerable databases are partitioned exactly; otherwise the bulk is
/// aggregated with real-valued multiplicities.
std::vector<BlockClass> block_classes(const ThermalSpec& spec);

}  // namespace gsc

#endif
