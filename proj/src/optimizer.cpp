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

#include "gsc/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gsc/blockmath.hpp"

namespace gsc {

namespace {

constexpr double kGammaTol = 1e-8;
constexpr int kGridPoints = 1000;

void check_constraint_args(double gamma, int branch) {
  if (!std::isfinite(gamma))
    throw std::domain_error("gamma must be finite");
  if (branch < 1)
    throw std::invalid_argument("branch index must be at least 1");
}

// Square-root with a tolerance for tiny negative radicands produced by
// cancellation at the feasibility boundary.
double guarded_sqrt(double radicand) {
  if (radicand < 0.0) {
    if (radicand < -1e-12)
      throw std::domain_error(
          "no real coupling keeps the answer block at a full revival for "
          "these parameters");
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

}  // namespace

double delta_from_gamma(double gamma, int branch) {
  check_constraint_args(gamma, branch);
  const double n = branch;
  return guarded_sqrt(gamma * (1.0 - gamma) + 0.25 * (n * n - 1.0));
}

double delta_for_time(double gamma, double t, int branch) {
  check_constraint_args(gamma, branch);
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::domain_error("round time must be positive and finite");
  const double half_swap = std::numbers::pi * branch / t;
  const double detuning = 0.5 - gamma;
  return guarded_sqrt(half_swap * half_swap - detuning * detuning);
}

double objective(double gamma, double t, int branch) {
  const double delta = delta_for_time(gamma, t, branch);
  return 1.0 -
         survival_prob(block_for_type(BlockType::Generic, gamma, delta), t);
}

OptimizationResult optimize_params(double t, int branch) {
  check_constraint_args(0.0, branch);
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::domain_error("round time must be positive and finite");

  // Feasibility: |1/2 - gamma| <= pi branch / t. Only the region up to
  // gamma = 1/2 is searched; beyond it the ancilla bias starts reviving
  // generic blocks as well.
  const double lo = std::max(0.0, 0.5 - std::numbers::pi * branch / t);
  const double hi = 0.5;

  const auto f = [&](double gamma) { return objective(gamma, t, branch); };

  int best = 0;
  double best_value = -1.0;
  for (int k = 0; k <= kGridPoints; ++k) {
    const double gamma = lo + (hi - lo) * k / kGridPoints;
    const double value = f(gamma);
    if (value > best_value) {  // strict: ties keep the smallest gamma
      best_value = value;
      best = k;
    }
  }

  double a = lo + (hi - lo) * std::max(0, best - 1) / kGridPoints;
  double b = lo + (hi - lo) * std::min(kGridPoints, best + 1) / kGridPoints;

  // Golden-section ascent on the bracketing cells.
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > kGammaTol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }

  OptimizationResult result;
  result.gamma = 0.5 * (a + b);
  result.delta = delta_for_time(result.gamma, t, branch);
  result.t = t;
  result.branch = branch;
  result.objective = f(result.gamma);
  result.b0_residual = std::abs(
      1.0 - survival_prob(
                block_for_type(BlockType::Answer, result.gamma, result.delta),
                t));
  result.b1 = survival_prob(
      block_for_type(BlockType::Neighbor, result.gamma, result.delta), t);
  result.b2 = 1.0 - result.objective;
  return result;
}

}  // namespace gsc
