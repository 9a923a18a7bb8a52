// Copyright 2026 The mtscombine Authors.
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

#ifndef MTSC_RNG_H_
#define MTSC_RNG_H_

#include <algorithm>
#include <cstdint>
#include <random>

namespace mtsc {

using Rng = std::mt19937_64;

// Stafford's mix13 finalizer, as used by splitmix64.
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of stream `stream` for trial `trial` of an experiment seeded with
// `seed`. Stream 0 drives the instance and heuristics, stream 1 the
// algorithm's coins; keeping them apart makes the adversary oblivious.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t trial,
                                   std::uint64_t stream = 0) {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ SplitMix64(trial + 1));
  return SplitMix64(h ^ SplitMix64(~stream));
}

inline constexpr std::uint64_t kInstanceStream = 0;
inline constexpr std::uint64_t kAlgorithmStream = 1;

// Uniform double in [0, 1) with 53 random bits. Used instead of
// std::uniform_real_distribution so draws do not depend on the standard
// library implementation.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool Bernoulli(Rng& rng, double p) { return Uniform01(rng) < p; }

// Uniform index in {0, ..., n-1}; n is expected to be small.
inline int UniformIndex(Rng& rng, int n) {
  return std::min(n - 1, static_cast<int>(Uniform01(rng) * n));
}

}  // namespace mtsc

#endif  // MTSC_RNG_H_
