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

#include "gsc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "gsc/blockmath.hpp"
#include "gsc/fullsim.hpp"
#include "gsc/optimizer.hpp"
#include "gsc/protocol.hpp"
#include "gsc/random.hpp"
#include "gsc/thermal.hpp"

namespace gsc {

namespace {

constexpr double kTight = 1e-10;

struct Sweep {
  const VerifyOptions& opts;
  std::mt19937_64 rng;

  explicit Sweep(const VerifyOptions& options)
      : opts(options), rng(trajectory_engine(options.seed, 0)) {}

  double unit() { return uniform_unit(rng); }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::uint64_t index(std::uint64_t bound) { return rng() % bound; }
};

using Mat2 = std::array<std::complex<double>, 4>;  // row-major ee,eg,ge,gg

Mat2 as_matrix(const BlockPropagator& u) { return {u.ee, u.eg, u.ge, u.gg}; }

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

TwoLevelBlock random_block(Sweep& sweep) {
  return TwoLevelBlock{sweep.range(-2.0, 2.0), sweep.range(-2.0, 2.0),
                       sweep.range(0.0, 1.0)};
}

VerifyCheck check_unitarity(Sweep& sweep) {
  VerifyCheck check{"propagator-unitarity", false, sweep.opts.cases, 0.0,
                    kTight};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    const TwoLevelBlock block = random_block(sweep);
    const double t = sweep.range(0.001, 4.0 * std::numbers::pi);
    const Mat2 u = as_matrix(propagator(block, t));
    const Mat2 udag = {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]),
                       std::conj(u[3])};
    const Mat2 eye = {1.0, 0.0, 0.0, 1.0};
    check.max_error =
        std::max(check.max_error, max_abs_diff(multiply(u, udag), eye));
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

VerifyCheck check_composition(Sweep& sweep) {
  VerifyCheck check{"propagator-composition", false, sweep.opts.cases, 0.0,
                    kTight};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    const TwoLevelBlock block = random_block(sweep);
    const double t1 = sweep.range(0.001, 2.0 * std::numbers::pi);
    const double t2 = sweep.range(0.001, 2.0 * std::numbers::pi);
    const Mat2 whole = as_matrix(propagator(block, t1 + t2));
    const Mat2 parts = multiply(as_matrix(propagator(block, t2)),
                                as_matrix(propagator(block, t1)));
    check.max_error = std::max(check.max_error, max_abs_diff(whole, parts));
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

VerifyCheck check_survival_definition(Sweep& sweep) {
  VerifyCheck check{"survival-matches-propagator", false, sweep.opts.cases,
                    0.0, kTight};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    const TwoLevelBlock block = random_block(sweep);
    const double t = sweep.range(0.001, 4.0 * std::numbers::pi);
    const double direct = survival_prob(block, t);
    const double from_u = std::norm(propagator(block, t).gg);
    check.max_error = std::max(check.max_error, std::abs(direct - from_u));
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

WeightState random_weight_state(Sweep& sweep) {
  const std::size_t n_groups = 2 + sweep.index(4);
  WeightState state;
  double z = 0.0;
  for (std::size_t g = 0; g < n_groups; ++g) {
    WeightGroup group;
    group.weight = sweep.range(1e-3, 1.0);
    group.b = sweep.range(0.0, 1.0);
    group.multiplicity =
        g == 0 ? 1.0 : std::floor(sweep.range(1.0, 50.0));
    z += group.weight * group.multiplicity;
    state.groups.push_back(group);
  }
  for (WeightGroup& group : state.groups) group.weight /= z;
  return state;
}

VerifyCheck check_recursion_vs_closed_form(Sweep& sweep) {
  VerifyCheck check{"recursion-vs-closed-form", false, sweep.opts.cases, 0.0,
                    1e-12};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    const WeightState start = random_weight_state(sweep);
    const std::uint64_t m = 1 + sweep.index(40);
    WeightState stepped = start;
    bool dead = false;
    for (std::uint64_t r = 0; r < m; ++r) {
      try {
        stepped = step(stepped);
      } catch (const ZeroSurvival&) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    const WeightState closed = weights_after(start, m);
    double err = std::abs(stepped.survival - closed.survival) /
                 std::max(stepped.survival, 1e-300);
    for (std::size_t g = 0; g < start.groups.size(); ++g)
      err = std::max(err, std::abs(stepped.groups[g].weight -
                                   closed.groups[g].weight));
    check.max_error = std::max(check.max_error, err);
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

ThermalSpec random_degenerate_spec(Sweep& sweep) {
  ThermalSpec spec;
  spec.n_states = 4.0 + static_cast<double>(
                            sweep.index(std::max(1u, sweep.opts.max_states - 3)));
  if (sweep.unit() < 0.5)
    spec.dT_ratio = sweep.range(0.0, 5.0);
  else
    spec.p0_override = sweep.range(0.05, 0.95);
  return spec;
}

CoolingParams random_params(Sweep& sweep) {
  return CoolingParams{sweep.range(-1.0, 1.0), sweep.range(0.001, 0.5),
                       sweep.range(0.1, 4.0 * std::numbers::pi)};
}

double report_difference(const CoolingReport& dense, const WeightState& after) {
  const double err_survival = std::abs(dense.survival_probability - after.survival);
  const double err_cooling =
      std::abs(dense.cooling_probability - after.cooling_probability());
  // Analytic ensembles are diagonal, so fidelity must equal the cooling
  // probability on both routes.
  const double err_fidelity =
      std::abs(dense.conditional_fidelity - after.cooling_probability());
  return std::max({err_survival, err_cooling, err_fidelity});
}

VerifyCheck check_analytic_vs_dense(Sweep& sweep) {
  VerifyCheck check{"analytic-vs-dense", false, sweep.opts.cases, 0.0, kTight};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    const ThermalSpec spec = random_degenerate_spec(sweep);
    const CoolingParams params = random_params(sweep);
    const std::uint64_t m = sweep.index(6);
    const std::size_t answer =
        static_cast<std::size_t>(sweep.index(
            static_cast<std::uint64_t>(spec.n_states)));
    const WeightState after =
        weights_after(initial_weights(spec, params), m);
    const CoolingReport dense = run_shot_cooling(spec, params, answer, m);
    check.max_error = std::max(check.max_error,
                               report_difference(dense, after));
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

VerifyCheck check_split_vs_dense(Sweep& sweep) {
  VerifyCheck check{"split-spectrum-vs-dense", false, sweep.opts.cases, 0.0,
                    kTight};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    ThermalSpec spec = random_degenerate_spec(sweep);
    spec.n_states = std::max(6.0, spec.n_states);
    const LevelLabel labels[2] = {LevelLabel::Low, LevelLabel::High};
    const BulkPattern patterns[3] = {BulkPattern::AllLow, BulkPattern::AllHigh,
                                     BulkPattern::Alternating};
    spec.spectrum = SpectrumModel::split_spectrum(
        sweep.range(0.0, 0.3), labels[sweep.index(2)], labels[sweep.index(2)],
        patterns[sweep.index(3)]);
    const CoolingParams params = random_params(sweep);
    const std::uint64_t m = sweep.index(5);
    const std::size_t answer =
        static_cast<std::size_t>(sweep.index(
            static_cast<std::uint64_t>(spec.n_states)));
    const WeightState after =
        weights_after(initial_weights(spec, params), m);
    const CoolingReport dense = run_shot_cooling(spec, params, answer, m);
    check.max_error = std::max(check.max_error,
                               report_difference(dense, after));
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

VerifyCheck check_strategy_one(Sweep& sweep) {
  VerifyCheck check{"strategy-one-vs-dense", false, sweep.opts.cases, 0.0,
                    kTight};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    ThermalSpec spec;
    spec.n_states = 2.0 + static_cast<double>(
                              sweep.index(sweep.opts.max_states - 1));
    spec.p0_override = sweep.range(0.02, 0.98);
    StrategyOneConfig config;
    config.delta1 = sweep.range(0.01, 0.3);
    config.delta2 = sweep.range(0.01, 0.3);
    config.j1 = static_cast<unsigned>(sweep.index(3));
    config.j2 = static_cast<unsigned>(sweep.index(3));
    const std::size_t answer =
        static_cast<std::size_t>(sweep.index(
            static_cast<std::uint64_t>(spec.n_states)));

    const StrategyOneReport analytic = strategy_one(spec, config);
    const CoolingReport dense = run_shot_strategy_one(spec, config, answer);
    double err = std::abs(analytic.report.conditional_fidelity - 1.0);
    err = std::max(err, std::abs(dense.conditional_fidelity - 1.0));
    err = std::max(err,
                   std::abs(analytic.p_success - dense.survival_probability));
    err = std::max(err, std::abs(analytic.p_success -
                                 analytic.report.survival_probability));
    check.max_error = std::max(check.max_error, err);
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

VerifyCheck check_constraint_revival(Sweep& sweep) {
  VerifyCheck check{"constrained-answer-revival", false, sweep.opts.cases,
                    0.0, kTight};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    const double t = sweep.range(2.0, 20.0);
    const int branch = 1 + static_cast<int>(sweep.index(3));
    const double lo = std::max(0.0, 0.5 - std::numbers::pi * branch / t);
    const double gamma = sweep.range(lo, 0.5);
    const double delta = delta_for_time(gamma, t, branch);
    const double b0 =
        survival_prob(block_for_type(BlockType::Answer, gamma, delta), t);
    check.max_error = std::max(check.max_error, std::abs(1.0 - b0));
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

VerifyCheck check_bound_dominance(Sweep& sweep) {
  VerifyCheck check{"bound-vs-exact-count", false, 0, 0.0, 0.5};
  const OptimizationResult opt = optimize_params(2.0 * std::numbers::pi, 1);
  const CoolingParams params{opt.gamma, opt.delta, opt.t};
  const double sizes[3] = {1e6, 1e12, 1e23};
  const double ratios[4] = {0.0, 1.0, 3.0, 9.0};
  const double targets[2] = {0.5, 0.9};
  for (double n : sizes) {
    for (double ratio : ratios) {
      for (double target : targets) {
        ThermalSpec spec;
        spec.n_states = n;
        spec.dT_ratio = ratio;
        double bound;
        try {
          bound = measurement_bound(spec, opt.b2, target);
        } catch (const BoundInvalid&) {
          continue;  // precondition-violating cell
        }
        ++check.cases;
        const std::uint64_t exact = min_measurements(spec, params, target);
        const double excess =
            static_cast<double>(exact) - std::ceil(bound);
        check.max_error = std::max(check.max_error, excess);
      }
    }
  }
  (void)sweep;
  check.passed = check.max_error <= 0.0;
  return check;
}

VerifyCheck check_monte_carlo(Sweep& sweep) {
  // Statistical check: errors are in sigma units, not absolute.
  VerifyCheck check{"monte-carlo-vs-analytic", false, 0, 0.0, 4.0};
  const OptimizationResult opt = optimize_params(2.0 * std::numbers::pi, 1);
  const CoolingParams params{opt.gamma, opt.delta, opt.t};
  const std::uint64_t rounds_grid[2] = {2, 3};
  const double sizes[2] = {8.0, 16.0};
  for (double n : sizes) {
    for (std::uint64_t rounds : rounds_grid) {
      ThermalSpec spec;
      spec.n_states = n;
      spec.dT_ratio = 0.0;
      const WeightState after =
          weights_after(initial_weights(spec, params), rounds);
      MonteCarloOptions options;
      options.trials = sweep.opts.trials;
      options.seed = sweep.opts.seed + 17 * rounds +
                     static_cast<std::uint64_t>(n);
      const TrajectoryStats stats =
          monte_carlo(spec, params, 0, rounds, options);
      ++check.cases;
      const double ps = after.survival;
      const double sigma_s = std::sqrt(
          ps * (1.0 - ps) / static_cast<double>(stats.attempts));
      const double pc = after.cooling_probability();
      const double sigma_c = std::sqrt(
          pc * (1.0 - pc) / std::max<std::uint64_t>(1, stats.successes));
      const double z_s =
          std::abs(stats.empirical_survival() - ps) / sigma_s;
      const double z_c =
          std::abs(stats.empirical_fidelity() - pc) / sigma_c;
      check.max_error = std::max({check.max_error, z_s, z_c});
    }
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

VerifyCheck check_phase_kickback(Sweep& sweep) {
  VerifyCheck check{"one-measurement-readout", false, sweep.opts.cases, 0.0,
                    1e-12};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    const std::size_t n = sweep.unit() < 0.5 ? 4 : 8;
    const std::size_t answer = static_cast<std::size_t>(sweep.index(n));
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k)
      psi[k] = std::complex<double>(sweep.range(-1.0, 1.0),
                                    sweep.range(-1.0, 1.0));
    psi.normalize();
    const KickbackResult result = phase_kickback(psi, answer);
    double err = std::abs(result.p_ground - std::norm(psi[answer]));
    if (result.post_ground)
      err = std::max(err,
                     std::abs(std::norm((*result.post_ground)[answer]) - 1.0));
    if (result.post_excited)
      err = std::max(err, std::norm((*result.post_excited)[answer]));
    check.max_error = std::max(check.max_error, err);
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

VerifyCheck check_translation_symmetry(Sweep& sweep) {
  VerifyCheck check{"answer-translation-symmetry", false, sweep.opts.cases,
                    0.0, kTight};
  for (std::uint32_t c = 0; c < check.cases; ++c) {
    const std::size_t n = 4 + sweep.index(9);
    SpectrumModel model = SpectrumModel::degenerate();
    if (sweep.unit() < 0.5) {
      const LevelLabel labels[2] = {LevelLabel::Low, LevelLabel::High};
      const BulkPattern patterns[3] = {
          BulkPattern::AllLow, BulkPattern::AllHigh, BulkPattern::Alternating};
      model = SpectrumModel::split_spectrum(sweep.range(0.0, 0.3),
                                            labels[sweep.index(2)],
                                            labels[sweep.index(2)],
                                            patterns[sweep.index(3)]);
    }
    const std::size_t answer = sweep.index(n);
    const double gamma = sweep.range(-1.0, 1.0);
    const double delta = sweep.range(0.001, 0.5);
    const auto eigenvalues = [&](std::size_t w) {
      const Eigen::MatrixXcd h =
          build_hamiltonian(oracle_energies(n, w, model), gamma, delta);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
      return Eigen::VectorXd(solver.eigenvalues());
    };
    const Eigen::VectorXd base = eigenvalues(answer);
    const Eigen::VectorXd shifted = eigenvalues((answer + 1) % n);
    check.max_error = std::max(
        check.max_error, (base - shifted).cwiseAbs().maxCoeff());
  }
  check.passed = check.max_error <= check.tolerance;
  return check;
}

void emit(const VerifySink& sink, const VerifyCheck& check) {
  if (!sink) return;
  char line[160];
  std::snprintf(line, sizeof line,
                "[%s] %-30s cases=%-4u max_err=%-12.3g tol=%.3g",
                check.passed ? "PASS" : "FAIL", check.name.c_str(),
                check.cases, check.max_error, check.tolerance);
  sink(line);
}

}  // namespace

VerifySummary run_verification(const VerifyOptions& options,
                               const VerifySink& sink) {
  if (options.max_states < 4 || options.max_states > 64)
    throw std::invalid_argument("max_states must lie in [4, 64]");
  if (options.cases == 0 || options.trials == 0)
    throw std::invalid_argument("cases and trials must be positive");

  Sweep sweep(options);
  VerifySummary summary;
  const std::vector<VerifyCheck (*)(Sweep&)> battery = {
      check_unitarity,          check_composition,
      check_survival_definition, check_recursion_vs_closed_form,
      check_analytic_vs_dense,  check_split_vs_dense,
      check_strategy_one,       check_constraint_revival,
      check_bound_dominance,    check_monte_carlo,
      check_phase_kickback,     check_translation_symmetry,
  };
  for (const auto& run_check : battery) {
    VerifyCheck check = run_check(sweep);
    emit(sink, check);
    if (check.tolerance <= 1e-9)
      summary.max_error = std::max(summary.max_error, check.max_error);
    summary.checks.push_back(std::move(check));
  }
  summary.all_passed = std::all_of(
      summary.checks.begin(), summary.checks.end(),
      [](const VerifyCheck& check) { return check.passed; });
  if (sink) {
    char line[160];
    std::snprintf(line, sizeof line,
                  "%zu checks, %zu failed, worst tight-tolerance error %.3g",
                  summary.checks.size(),
                  static_cast<std::size_t>(std::count_if(
                      summary.checks.begin(), summary.checks.end(),
                      [](const VerifyCheck& c) { return !c.passed; })),
                  summary.max_error);
    sink(line);
  }
  return summary;
}

}  // namespace gsc
