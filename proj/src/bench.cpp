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

#include "comsim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "comsim/com.hpp"
#include "comsim/rng.hpp"

namespace comsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PauliElement random_observable(std::size_t n, Rng& rng) {
  PauliElement p(n);
  bool nontrivial = false;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bits = rng.next();
    p.set_x(q, bits & 1);
    p.set_z(q, bits & 2);
    nontrivial |= (bits & 3) != 0;
  }
  if (!nontrivial) {
    p.set_x(0, true);
  }
  if (rng.coin() < 0) {
    p.negate();
  }
  return p;
}

// Dense-ish state: layered H / CNOT ring / S so rows develop support across
// all qubits before the timed measurements start.
ComState scrambled_state(std::size_t n, std::uint64_t seed) {
  ComState state = ComState::random_init(n, seed);
  for (std::size_t round = 0; round < 3; ++round) {
    for (std::size_t q = 0; q < n; ++q) {
      if ((q + round) % 2 == 0) state.apply_h(q);
    }
    for (std::size_t q = 0; q < n; ++q) {
      state.apply_cnot(q, (q + 1 + round) % n);
    }
    for (std::size_t q = round % 3; q < n; q += 3) {
      state.apply_s(q);
    }
  }
  return state;
}

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[mid];
  return 0.5 * (samples[mid - 1] + samples[mid]);
}

double fit_slope(const std::vector<BenchPoint>& points, double BenchPoint::*field) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(points.size());
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(p.*field);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace

BenchResult run_update_benchmark(std::size_t min_n, std::size_t max_n, std::size_t reps,
                                 std::uint64_t seed) {
  if (min_n < 2 || max_n < min_n || reps < 1) {
    throw std::invalid_argument("bad benchmark configuration");
  }
  BenchResult result;

  for (std::size_t n = min_n; n <= max_n; n *= 2) {
    Rng rng(splitmix64(seed ^ n));
    ComState state = scrambled_state(n, rng.next());

    constexpr std::size_t kPoolSize = 32;
    std::vector<PauliElement> pool;
    pool.reserve(kPoolSize);
    for (std::size_t i = 0; i < kPoolSize; ++i) {
      pool.push_back(random_observable(n, rng));
    }

    std::size_t cursor = 0;
    const auto next_observable = [&]() -> const PauliElement& {
      return pool[cursor++ % kPoolSize];
    };

    // Warm-up: touches every row and faults in the working set.
    for (std::size_t i = 0; i < 3; ++i) {
      state.measure(next_observable());
    }

    // Batch enough updates per sample that the clock resolution is
    // irrelevant at small n.
    const auto estimate_start = Clock::now();
    state.measure(next_observable());
    const double estimate = std::max(seconds_since(estimate_start), 1e-9);
    const std::size_t batch = std::max<std::size_t>(1, static_cast<std::size_t>(100e-6 / estimate));

    std::vector<double> measure_samples;
    measure_samples.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r) {
      const auto start = Clock::now();
      for (std::size_t b = 0; b < batch; ++b) {
        state.measure(next_observable());
      }
      measure_samples.push_back(seconds_since(start) / static_cast<double>(batch));
    }

    // Symplectic products between dense rows; the sum is kept live so the
    // loop cannot be elided.
    volatile int sink = 0;
    const std::size_t sym_batch = 4096;
    std::vector<double> sym_samples;
    sym_samples.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r) {
      int acc = 0;
      const auto start = Clock::now();
      for (std::size_t b = 0; b < sym_batch; ++b) {
        acc ^= symplectic_product(pool[b % kPoolSize], pool[(b + 7) % kPoolSize]);
      }
      sym_samples.push_back(seconds_since(start) / static_cast<double>(sym_batch));
      sink = sink ^ acc;
    }
    (void)sink;

    result.points.push_back({n, median(std::move(measure_samples)), median(std::move(sym_samples))});
  }

  result.measure_slope = fit_slope(result.points, &BenchPoint::measure_seconds);
  result.symplectic_slope = fit_slope(result.points, &BenchPoint::symplectic_seconds);
  return result;
}

void write_bench_csv(const BenchResult& result, std::ostream& out) {
  out << "kind,n,seconds\n";
  for (const auto& p : result.points) {
    out << "measure," << p.n << ',' << p.measure_seconds << '\n';
  }
  for (const auto& p : result.points) {
    out << "symplectic," << p.n << ',' << p.symplectic_seconds << '\n';
  }
}

}  // namespace comsim
