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

#ifndef GSC_OPTIMIZER_HPP
#define GSC_OPTIMIZER_HPP

namespace gsc {

/// Fixed-parameter rounds must retain the answer with certainty: the answer
/// block's oscillation has to complete half-swaps an integer number of
/// times, rabi_frequency(answer) * t = pi * branch. These helpers solve that
/// constraint for the coupling.

/// Coupling at t = 2 pi: delta = sqrt(gamma (1 - gamma) + (branch^2 - 1)/4).
double delta_from_gamma(double gamma, int branch);

/// Coupling at arbitrary round time:
/// delta = sqrt((pi branch / t)^2 - (1/2 - gamma)^2).
/// Throws std::domain_error when no real coupling satisfies the constraint.
double delta_for_time(double gamma, double t, int branch);

/// Per-round removal probability of a generic block at the constrained
/// coupling, 1 - b2. This is what the round parameters should maximize: the
/// answer block is pinned at b0 = 1 by the constraint, so the best round is
/// the one that filters wrong states fastest.
double objective(double gamma, double t, int branch);

struct OptimizationResult {
  double gamma = 0.0;
  double delta = 0.0;
  double t = 0.0;
  int branch = 1;
  double objective = 0.0;     ///< 1 - b2 at the optimum
  double b0_residual = 0.0;   ///< |1 - b0|, zero up to roundoff
  double b1 = 0.0;            ///< neighbor-block survival at the optimum
  double b2 = 0.0;            ///< generic-block survival at the optimum
};

/// Maximize objective() over gamma in the feasible part of (0, 1/2] at the
/// given round time: a 1000-point grid scan locates the basin, then
/// golden-section refines to 1e-8 in gamma. Ties resolve to the smallest
/// gamma. At t = 2 pi, branch 1 this lands on gamma ~ 0.0593, delta ~ 0.2361.
OptimizationResult optimize_params(double t, int branch = 1);

}  // namespace gsc

#endif
