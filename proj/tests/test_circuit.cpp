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

#include "doctest.h"

#include <string>

#include "comsim/circuit.hpp"
#include "support.hpp"

using namespace comsim;

TEST_SUITE_BEGIN("circuit");

TEST_CASE("bell text parses to the expected program") {
  const Circuit c = parse_circuit("qubits 2\nh 1\ncnot 1 2\nmeasure IZ\n");
  CHECK(c.num_qubits == 2);
  REQUIRE(c.instructions.size() == 3);
  CHECK(c.instructions[0].kind == Instruction::Kind::H);
  CHECK(c.instructions[0].q0 == 0);
  CHECK(c.instructions[1].kind == Instruction::Kind::Cnot);
  CHECK(c.instructions[1].q0 == 0);
  CHECK(c.instructions[1].q1 == 1);
  CHECK(c.instructions[2].kind == Instruction::Kind::Measure);
  CHECK(*c.instructions[2].observable == parse_pauli("IZ"));
  CHECK(c.instructions[2].label == "m1");
}

TEST_CASE("comments, blank lines and explicit labels") {
  const Circuit c = parse_circuit(
      "# prepare and probe\n"
      "qubits 2\n"
      "\n"
      "h 1   # rotate\n"
      "measure ZI as first\n"
      "measure -ZZ\n");
  REQUIRE(c.instructions.size() == 3);
  CHECK(c.instructions[1].label == "first");
  CHECK(c.instructions[2].label == "m2");  // numbered by measurement position
  CHECK(*c.instructions[2].observable == parse_pauli("-ZZ"));
  CHECK(c.measurement_labels() == std::vector<std::string>{"first", "m2"});
}

TEST_CASE("parse errors carry line numbers") {
  const auto message_of = [](const char* text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message_of("h 1\n") == "line 1: first instruction must be 'qubits <n>'");
  CHECK(message_of("qubits 2\nfrobnicate 1\n") == "line 2: unknown keyword 'frobnicate'");
  CHECK(message_of("qubits 2\n\n# c\nh 3\n").substr(0, 7) == "line 4:");
  CHECK_THROWS_AS(parse_circuit(""), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\ncnot 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\ncnot 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nqubits 2\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nmeasure IZ as a\nmeasure ZI as a\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nmeasure IZ extra junk\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh one\n"), ParseError);
}

TEST_CASE("identity and ill-sized observables are rejected") {
  CHECK_THROWS_AS(parse_circuit("qubits 1\nmeasure II\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nmeasure II\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nmeasure -II\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nmeasure Z\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nmeasure IZI\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nmeasure QQ\n"), ParseError);
}

TEST_CASE("serialization round trips and is canonical") {
  Rng rng(0x70c5);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = test::random_clifford_circuit(1 + rng.below(5), 12, 3, rng);
    const std::string text = serialize_circuit(c);
    CHECK(parse_circuit(text) == c);
    CHECK(serialize_circuit(parse_circuit(text)) == text);
  }
  // Desugared labels and signs are made explicit.
  const std::string canonical = serialize_circuit(parse_circuit("qubits 2\nmeasure IZ\n"));
  CHECK(canonical == "qubits 2\nmeasure +IZ as m1\n");
}

TEST_CASE("demo registry") {
  CHECK_THROWS_AS(demo_circuit("nope"), std::invalid_argument);
  for (const auto& name : demo_names()) {
    const Circuit c = demo_circuit(name);
    CHECK(c.num_measurements() >= 1);
  }
  const Circuit bell = demo_circuit("bell");
  CHECK(bell.num_qubits == 2);
  CHECK(bell.num_measurements() == 1);
  CHECK(*bell.instructions.back().observable == parse_pauli("IZ"));

  const Circuit ghz = demo_circuit("ghz");
  CHECK(ghz.num_qubits == 3);
  CHECK(ghz.measurement_labels() == std::vector<std::string>{"XXX", "XYY", "YXY", "YYX"});
  CHECK(demo_circuit("ghz-xyy").num_measurements() == 1);

  const Circuit col3 = demo_circuit("peres-mermin-col3");
  CHECK(col3.measurement_labels() == std::vector<std::string>{"XX", "ZZ", "YY"});
}

TEST_SUITE_END();
