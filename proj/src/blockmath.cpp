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

#include "gsc/blockmath.hpp"

#include <algorithm>
#include <cmath>

namespace gsc {

namespace {
// Below this phase the direct sin(Wt)/W quotient is replaced by its series;
// at 1e-8 the truncation error of the two-term series is ~1e-33, far below
// the 1e-12 accuracy target, while the quotient itself would lose digits.
constexpr double kSmallPhase = 1e-8;
}  // namespace

double TwoLevelBlock::rabi_frequency() const {
  return std::hypot(half_splitting(), coupling);
}

TwoLevelBlock block_for_type(BlockType type, double gamma, double delta) {
  switch (type) {
    case BlockType::Answer:
      return generalized_block(1.0, 0.0, gamma, delta);
    case BlockType::Neighbor:
      return generalized_block(0.0, 1.0, gamma, delta);
    case BlockType::Generic:
    default:
      return generalized_block(1.0, 1.0, gamma, delta);
  }
}

TwoLevelBlock generalized_block(double e_left, double e_right, double gamma,
                                double delta) {
  // The ancilla bias lowers the excited-ancilla component and raises the
  // ground-ancilla component.
  return TwoLevelBlock{e_left - gamma, e_right + gamma, delta};
}

BlockPropagator propagator(const TwoLevelBlock& block, double t) {
  const double c = block.mean();
  const double a = block.half_splitting();
  const double w = block.rabi_frequency();
  const double phase = w * t;

  double cos_part;
  double sinc;  // sin(w t) / w, finite as w -> 0
  if (std::abs(phase) < kSmallPhase) {
    cos_part = 1.0 - 0.5 * phase * phase;
    sinc = t * (1.0 - phase * phase / 6.0);
  } else {
    cos_part = std::cos(phase);
    sinc = std::sin(phase) / w;
  }

  const std::complex<double> global = std::polar(1.0, -c * t);
  const std::complex<double> im(0.0, 1.0);
  BlockPropagator u;
  u.ee = global * (cos_part - im * (a * sinc));
  u.gg = global * (cos_part + im * (a * sinc));
  u.eg = global * (-im * (block.coupling * sinc));
  u.ge = u.eg;
  return u;
}

double survival_prob(const TwoLevelBlock& block, double t) {
  if (block.coupling == 0.0) return 1.0;  // diagonal block never leaks
  const double w = block.rabi_frequency();
  const double s = std::sin(w * t);
  const double ratio = block.coupling / w;  // coupling <= w, so ratio <= 1
  const double leak = ratio * ratio * s * s;
  return std::clamp(1.0 - leak, 0.0, 1.0);
}

}  // namespace gsc
