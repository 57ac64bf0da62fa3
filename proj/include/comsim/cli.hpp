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
#include <iosfwd>
#include <string>
#include <vector>

#include "comsim/circuit.hpp"
#include "comsim/microscope.hpp"

namespace comsim::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // verdict failure or unexpected error
  kParseError = 2,   // circuit text / demo name problems
  kCapExceeded = 3,  // oracle qubit cap
  kIoError = 4,      // input file not readable
};

enum class Engine { Sstr, Com, Oracle };
enum class Format { Text, Json };

std::string engine_name(Engine engine);

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

// `demo:<name>` or a path to a `.stab` file.
Circuit load_circuit(const std::string& input);

// Shots i = 0..shots-1 run with seeds derive_shot_seed(seed, i), distributed
// over worker threads; records are returned in shot order regardless of
// scheduling, so output is reproducible byte for byte.
std::vector<ShotRecord> run_shots(const Circuit& circuit, Engine engine, std::uint64_t seed,
                                  std::uint64_t shots);

struct RunConfig {
  Engine engine = Engine::Com;
  std::uint64_t seed = 0;
  std::uint64_t shots = 1;
  std::string input;
  Format format = Format::Json;
};

// One record per line: JSON objects
//   {"seed": <u64>, "engine": "<name>", "outcomes": [{"label": ..., "value": +-1}, ...]}
// or `seed=<u64> <label>=<+1|-1> ...` in text mode.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& diag);

struct DiffRow {
  std::string outcomes;  // '+'/'-' per measurement in program order
  double oracle_p = 0.0;
  std::uint64_t sstr_count = 0;
  std::uint64_t com_count = 0;
  double sstr_z = 0.0;
  double com_z = 0.0;
};

struct DiffReport {
  std::uint64_t shots = 0;
  std::vector<DiffRow> rows;
  bool support_ok = false;  // no outcome outside the oracle support, oracle support covered
  double max_abs_z = 0.0;
  bool pass = false;  // support_ok and every |z| <= 5
};

// Exact oracle distribution vs empirical sstr/com frequencies, per outcome
// string. The pass line uses 5-sigma binomial thresholds: at 10^4 shots that
// makes false alarms negligible while catching any constant bias.
DiffReport diff_circuit(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed);

int cmd_diff(const RunConfig& config, std::ostream& out, std::ostream& diag);

struct MicroscopeCheck {
  std::string label;
  int microscope_outcome = 0;
  int direct_outcome = 0;
  MicroscopeTrace trace;
  bool outcome_match = false;
  bool state_match = false;
  bool provenance = false;  // retained destabilizer sign equals the pointer's initial sign
};

struct MicroscopeReport {
  std::vector<MicroscopeCheck> checks;
  bool pass = false;
};

// Runs every measurement of the circuit twice on lockstep states: through
// the pointer procedure and directly, with the direct update's coin pinned
// to the sign the pointer actually delivered.
MicroscopeReport microscope_circuit(const Circuit& circuit, std::uint64_t seed);

int cmd_microscope(const RunConfig& config, std::ostream& out, std::ostream& diag);

struct BenchConfig {
  std::size_t max_n = 4096;
  std::size_t reps = 25;
  std::uint64_t seed = 1;
};

// CSV to `out`, human-readable slope summary to `diag`.
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace comsim::cli
