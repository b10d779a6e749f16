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

#ifndef GSC_RANDOM_HPP
#define GSC_RANDOM_HPP

#include <cstdint>
#include <random>

namespace gsc {

/// SplitMix64 step; a fast, well-mixed generator used only to derive seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Independent engine for one trajectory. Every trajectory gets its own
/// stream derived from (seed, index), so results do not depend on how work
/// is ordered or partitioned.
inline std::mt19937_64 trajectory_engine(std::uint64_t seed,
                                         std::uint64_t index) {
  std::uint64_t s = seed;
  const std::uint64_t lane = splitmix64(s) ^ (index * 0x9e3779b97f4a7c15ull);
  std::uint64_t t = lane;
  const std::uint64_t a = splitmix64(t);
  const std::uint64_t b = splitmix64(t);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) built from the top 53 bits; bit-identical
/// across platforms, unlike std::uniform_real_distribution.
inline double uniform_unit(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace gsc

#endif
