// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROBING_RANDOM_HPP_
#define PROBING_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace probing {

using Rng = std::mt19937_64;

// Default seed used by the CLI and examples when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20130715;

// Trials are processed in fixed-size blocks, each with its own derived seed,
// so results do not depend on how blocks are distributed across workers.
inline constexpr std::size_t kTrialBlock = 1024;

// SplitMix64 finalizer over (master, stream).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Degenerate probabilities consume no randomness.
inline bool bernoulli(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return uniform01(rng) < p;
}

// Calls f(trial_index, rng) for every trial; rng is reseeded per block.
template <class F>
void for_each_trial(std::uint64_t seed, std::size_t trials, F&& f) {
  Rng rng;
  for (std::size_t t = 0; t < trials; ++t) {
    if (t % kTrialBlock == 0) rng.seed(derive_seed(seed, t / kTrialBlock));
    f(t, rng);
  }
}

}  // namespace probing

#endif  // PROBING_RANDOM_HPP_
