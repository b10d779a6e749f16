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

#ifndef GSC_BLOCKMATH_HPP
#define GSC_BLOCKMATH_HPP

#include <complex>

namespace gsc {

/// Classes of invariant 2x2 subspaces of the joint oracle+ancilla
/// Hamiltonian. With a degenerate excited manifold there are exactly three:
///
///   Answer:   spans (|w-1, e>, |w, g>)   - the block holding the target
///   Neighbor: spans (|w, e>,   |w+1, g>) - the only other block touching |w>
///   Generic:  the remaining N-2 blocks, all identical
///
/// Energies are expressed in units of the oracle gap (epsilon = 1, hbar = 1).
enum class BlockType { Answer, Neighbor, Generic };

/// Real-symmetric 2x2 Hamiltonian block over (excited-ancilla,
/// ground-ancilla) components:
///
///     h = [ e_upper   coupling ]
///         [ coupling  e_lower  ]
struct TwoLevelBlock {
  double e_upper = 0.0;   ///< diagonal entry of the excited-ancilla component
  double e_lower = 0.0;   ///< diagonal entry of the ground-ancilla component
  double coupling = 0.0;  ///< ancilla-oracle exchange amplitude, >= 0

  /// Mean energy c; contributes only a global phase exp(-i c t).
  double mean() const { return 0.5 * (e_upper + e_lower); }

  /// Half the diagonal splitting a; h = c I + a sigma_z + coupling sigma_x.
  double half_splitting() const { return 0.5 * (e_upper - e_lower); }

  /// Effective oscillation frequency sqrt(a^2 + coupling^2).
  double rabi_frequency() const;
};

/// Block for the degenerate-spectrum protocol with ancilla bias gamma
/// (ground raised by +gamma, excited lowered by -gamma) and coupling delta.
TwoLevelBlock block_for_type(BlockType type, double gamma, double delta);

/// Block between arbitrary oracle energies: e_left is the oracle energy of
/// the excited-ancilla component, e_right of the ground-ancilla component.
/// Reduces to block_for_type when the energies are drawn from {0, 1}.
TwoLevelBlock generalized_block(double e_left, double e_right, double gamma,
                                double delta);

/// Matrix elements of the unitary exp(-i h t) over (e, g) components.
struct BlockPropagator {
  std::complex<double> ee, eg, ge, gg;
};

/// Closed-form propagator
///   exp(-i h t) = exp(-i c t) [cos(Wt) I - i sin(Wt)/W (a sigma_z + d sigma_x)]
/// with W the Rabi frequency. The W -> 0 limit of sin(Wt)/W is taken by a
/// series branch, so the result is finite for every block.
BlockPropagator propagator(const TwoLevelBlock& block, double t);

/// Probability that a pure ground-ancilla component survives the conditioned
/// measurement after evolving for time t: |U_gg|^2 = 1 - (d/W)^2 sin^2(Wt).
/// Exactly 1 when the coupling vanishes; always within [0, 1].
double survival_prob(const TwoLevelBlock& block, double t);

}  // namespace gsc

#endif
