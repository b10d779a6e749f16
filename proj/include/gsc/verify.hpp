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

#ifndef GSC_VERIFY_HPP
#define GSC_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gsc {

/// Knobs for the randomized cross-check battery. The defaults finish in
/// well under a minute; larger values tighten the sweep.
struct VerifyOptions {
  std::uint32_t max_states = 16;  ///< largest database in randomized sweeps
  std::uint32_t cases = 100;      ///< random cases per check
  std::uint64_t seed = 20260814;
  std::uint64_t trials = 4000;  ///< Monte Carlo sample size
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::uint32_t cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
};

struct VerifySummary {
  std::vector<VerifyCheck> checks;
  bool all_passed = false;
  double max_error = 0.0;  ///< worst error over the 1e-10-tolerance checks
};

/// Receives one human-readable line per finished check plus a final
/// summary line.
using VerifySink = std::function<void(const std::string&)>;

/// Runs every cross-check: closed-form block propagators against the dense
/// simulator, recursion against closed form, bound against exact counts,
/// Monte Carlo against analytic values, and the one-measurement readout.
/// Deterministic for fixed options.
VerifySummary run_verification(const VerifyOptions& options,
                               const VerifySink& sink);

}  // namespace gsc

#endif
