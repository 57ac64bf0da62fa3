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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace comsim {

struct BenchPoint {
  std::size_t n = 0;
  double measure_seconds = 0.0;     // one measurement update on a scrambled state
  double symplectic_seconds = 0.0;  // one symplectic product of dense rows
};

struct BenchResult {
  std::vector<BenchPoint> points;
  double measure_slope = 0.0;     // least-squares slope of log t vs log n
  double symplectic_slope = 0.0;
};

// Times the measurement-update kernel on pre-built scrambled states for n in
// the geometric ladder {min_n, 2 min_n, ..., max_n}, taking the median of
// `reps` warm repetitions per point. Only the update itself is timed; state
// construction and observable generation happen outside the clock.
BenchResult run_update_benchmark(std::size_t min_n, std::size_t max_n, std::size_t reps,
                                 std::uint64_t seed);

// CSV rows `kind,n,seconds` with kinds `measure` and `symplectic`.
void write_bench_csv(const BenchResult& result, std::ostream& out);

}  // namespace comsim
