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

#include "comsim/circuit.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace comsim {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) {
      tokens.emplace_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected a number for ") + what + ", got '" + token + "'");
  }
  return value;
}

// 1-based index in the text, 0-based in the Instruction.
std::size_t parse_qubit(const std::string& token, std::size_t line, std::size_t num_qubits) {
  const std::size_t value = parse_count(token, line, "a qubit index");
  if (value < 1 || value > num_qubits) {
    throw ParseError(line, "qubit index " + token + " out of range 1.." + std::to_string(num_qubits));
  }
  return value - 1;
}

}  // namespace

std::size_t Circuit::num_measurements() const {
  std::size_t count = 0;
  for (const auto& ins : instructions) {
    if (ins.kind == Instruction::Kind::Measure) ++count;
  }
  return count;
}

std::vector<std::string> Circuit::measurement_labels() const {
  std::vector<std::string> labels;
  for (const auto& ins : instructions) {
    if (ins.kind == Instruction::Kind::Measure) labels.push_back(ins.label);
  }
  return labels;
}

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool have_header = false;
  std::size_t measure_ordinal = 0;
  std::set<std::string> labels;

  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_number;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) {
      continue;
    }
    const std::string& keyword = tokens[0];

    if (!have_header) {
      if (keyword != "qubits") {
        throw ParseError(line_number, "first instruction must be 'qubits <n>'");
      }
      if (tokens.size() != 2) {
        throw ParseError(line_number, "'qubits' takes exactly one argument");
      }
      circuit.num_qubits = parse_count(tokens[1], line_number, "the qubit count");
      if (circuit.num_qubits < 1) {
        throw ParseError(line_number, "qubit count must be at least 1");
      }
      have_header = true;
      continue;
    }

    Instruction ins;
    if (keyword == "qubits") {
      throw ParseError(line_number, "duplicate 'qubits' header");
    } else if (keyword == "h" || keyword == "s") {
      if (tokens.size() != 2) {
        throw ParseError(line_number, "'" + keyword + "' takes exactly one qubit index");
      }
      ins.kind = keyword == "h" ? Instruction::Kind::H : Instruction::Kind::S;
      ins.q0 = parse_qubit(tokens[1], line_number, circuit.num_qubits);
    } else if (keyword == "cnot") {
      if (tokens.size() != 3) {
        throw ParseError(line_number, "'cnot' takes control and target indices");
      }
      ins.kind = Instruction::Kind::Cnot;
      ins.q0 = parse_qubit(tokens[1], line_number, circuit.num_qubits);
      ins.q1 = parse_qubit(tokens[2], line_number, circuit.num_qubits);
      if (ins.q0 == ins.q1) {
        throw ParseError(line_number, "cnot control and target must differ");
      }
    } else if (keyword == "measure") {
      if (tokens.size() != 2 && tokens.size() != 4) {
        throw ParseError(line_number, "'measure' takes an observable and an optional 'as <label>'");
      }
      ins.kind = Instruction::Kind::Measure;
      ++measure_ordinal;
      try {
        ins.observable = parse_pauli(tokens[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_number, std::string("bad observable: ") + e.what());
      }
      if (ins.observable->num_qubits() != circuit.num_qubits) {
        throw ParseError(line_number, "observable '" + tokens[1] + "' must have exactly " +
                                          std::to_string(circuit.num_qubits) + " letters");
      }
      if (ins.observable->is_identity()) {
        throw ParseError(line_number, "identity is not a measurable observable");
      }
      if (tokens.size() == 4) {
        if (tokens[2] != "as") {
          throw ParseError(line_number, "expected 'as <label>' after the observable");
        }
        ins.label = tokens[3];
      } else {
        ins.label = "m" + std::to_string(measure_ordinal);
      }
      if (!labels.insert(ins.label).second) {
        throw ParseError(line_number, "duplicate measurement label '" + ins.label + "'");
      }
    } else {
      throw ParseError(line_number, "unknown keyword '" + keyword + "'");
    }
    circuit.instructions.push_back(std::move(ins));
  }

  if (!have_header) {
    throw ParseError(line_number, "missing 'qubits <n>' header");
  }
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.num_qubits << '\n';
  for (const auto& ins : circuit.instructions) {
    switch (ins.kind) {
      case Instruction::Kind::H:
        out << "h " << ins.q0 + 1 << '\n';
        break;
      case Instruction::Kind::S:
        out << "s " << ins.q0 + 1 << '\n';
        break;
      case Instruction::Kind::Cnot:
        out << "cnot " << ins.q0 + 1 << ' ' << ins.q1 + 1 << '\n';
        break;
      case Instruction::Kind::Measure:
        out << "measure " << format_pauli(*ins.observable) << " as " << ins.label << '\n';
        break;
    }
  }
  return out.str();
}

namespace {

const std::map<std::string, std::string, std::less<>>& demo_table() {
  static const std::map<std::string, std::string, std::less<>> demos = {
      {"bell",
       "qubits 2\n"
       "h 1\n"
       "cnot 1 2\n"
       "measure IZ as IZ\n"},
      {"ghz",
       "qubits 3\n"
       "h 1\n"
       "cnot 1 2\n"
       "cnot 1 3\n"
       "measure XXX as XXX\n"
       "measure XYY as XYY\n"
       "measure YXY as YXY\n"
       "measure YYX as YYX\n"},
      {"ghz-xxx",
       "qubits 3\nh 1\ncnot 1 2\ncnot 1 3\nmeasure XXX as XXX\n"},
      {"ghz-xyy",
       "qubits 3\nh 1\ncnot 1 2\ncnot 1 3\nmeasure XYY as XYY\n"},
      {"ghz-yxy",
       "qubits 3\nh 1\ncnot 1 2\ncnot 1 3\nmeasure YXY as YXY\n"},
      {"ghz-yyx",
       "qubits 3\nh 1\ncnot 1 2\ncnot 1 3\nmeasure YYX as YYX\n"},
      // Rows and columns of the 2-qubit observable square
      //   XI IX XX / IZ ZI ZZ / XZ ZX YY
      // measured on the all-zeros input. Within one context the three
      // observables commute and their outcome product is fixed: +1 for the
      // rows and the first two columns, -1 for the third column.
      {"peres-mermin-row1",
       "qubits 2\nmeasure XI as XI\nmeasure IX as IX\nmeasure XX as XX\n"},
      {"peres-mermin-row2",
       "qubits 2\nmeasure IZ as IZ\nmeasure ZI as ZI\nmeasure ZZ as ZZ\n"},
      {"peres-mermin-row3",
       "qubits 2\nmeasure XZ as XZ\nmeasure ZX as ZX\nmeasure YY as YY\n"},
      {"peres-mermin-col1",
       "qubits 2\nmeasure XI as XI\nmeasure IZ as IZ\nmeasure XZ as XZ\n"},
      {"peres-mermin-col2",
       "qubits 2\nmeasure IX as IX\nmeasure ZI as ZI\nmeasure ZX as ZX\n"},
      {"peres-mermin-col3",
       "qubits 2\nmeasure XX as XX\nmeasure ZZ as ZZ\nmeasure YY as YY\n"},
      {"microscope",
       "qubits 2\n"
       "h 1\n"
       "cnot 1 2\n"
       "measure IZ as IZ\n"},
  };
  return demos;
}

}  // namespace

Circuit demo_circuit(std::string_view name) {
  const auto& demos = demo_table();
  const auto it = demos.find(name);
  if (it == demos.end()) {
    throw std::invalid_argument("unknown demo '" + std::string(name) + "'");
  }
  return parse_circuit(it->second);
}

std::vector<std::string> demo_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : demo_table()) {
    names.push_back(name);
  }
  return names;
}

}  // namespace comsim
