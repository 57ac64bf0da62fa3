// Copyright 2026 The comsim authors
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

#pragma once

#include <cstdint>
#include <random>

namespace comsim {

// splitmix64 mixing step, used to derive independent per-shot seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seed for shot `index` of a run started with `base_seed`.
constexpr std::uint64_t derive_shot_seed(std::uint64_t base_seed, std::uint64_t index) {
  return splitmix64(base_seed ^ splitmix64(index + 1));
}

// Seedable random stream. mt19937_64 is fully specified by the standard, and
// no distribution objects are used, so identical seeds give identical streams
// on every platform. Callers document the order in which they consume draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Fair sign: bit 0 of the next draw, 0 -> +1, 1 -> -1.
  int coin() { return (engine_() & 1ull) ? -1 : +1; }

  std::uint64_t next() { return engine_(); }

  // Uniform value in [0, bound), bound >= 1, rejection sampled.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t skip = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t r;
    do {
      r = engine_();
    } while (r < skip);
    return r % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace comsim
