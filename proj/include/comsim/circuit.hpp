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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "comsim/pauli.hpp"

namespace comsim {

// One line of the `.stab` format. Qubit indices are 0-based here; the text
// format is 1-based.
struct Instruction {
  enum class Kind { H, S, Cnot, Measure };

  Kind kind = Kind::H;
  std::size_t q0 = 0;  // H/S target, CNOT control
  std::size_t q1 = 0;  // CNOT target
  std::optional<PauliElement> observable;  // Measure only
  std::string label;                       // Measure only

  bool operator==(const Instruction& other) const = default;
};

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Instruction> instructions;

  std::size_t num_measurements() const;
  std::vector<std::string> measurement_labels() const;

  bool operator==(const Circuit& other) const = default;
};

// Outcomes of one shot, one (label, +-1) entry per MEASURE in program order.
struct ShotRecord {
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, int>> outcomes;

  bool operator==(const ShotRecord& other) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Grammar, one instruction per line, `#` starts a comment, blank lines
// ignored, qubit indices 1-based:
//
//   qubits <n>                     (required first instruction)
//   h <q>
//   s <q>
//   cnot <control> <target>
//   measure <pauli-text> [as <label>]
//
// Unlabeled measurements get labels m1, m2, ... numbered by measurement
// position. Labels must be unique. Measure operands must be Hermitian,
// non-identity and exactly n letters wide.
Circuit parse_circuit(std::string_view text);

// Canonical text form: serialize(parse(t)) is idempotent and
// parse(serialize(c)) == c. Labels are always written.
std::string serialize_circuit(const Circuit& circuit);

// Named demo circuits:
//   bell                      Bell pair, measure IZ
//   ghz                       GHZ triple, measure XXX, XYY, YXY, YYX
//   ghz-xxx / ghz-xyy / ghz-yxy / ghz-yyx
//   peres-mermin-row1..3      one row of the 2-qubit observable square
//   peres-mermin-col1..3      one column of the square
//   microscope                the bell scenario, used by the microscope command
Circuit demo_circuit(std::string_view name);
std::vector<std::string> demo_names();

}  // namespace comsim
