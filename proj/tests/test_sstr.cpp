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

#include <cmath>

#include "comsim/oracle.hpp"
#include "comsim/sstr.hpp"
#include "support.hpp"

using namespace comsim;
using test::binomial_z;
using test::kFiveSigma;
using test::random_pauli;

namespace {

SstrState bell(std::uint64_t seed) {
  SstrState state(2, seed);
  state.apply_h(0);
  state.apply_cnot(0, 1);
  return state;
}

}  // namespace

TEST_SUITE_BEGIN("sstr");

TEST_CASE("initial state is the all-zeros tableau") {
  const SstrState one(1, 0);
  CHECK(one.dump() == "+Z\n+X\n");
  const SstrState two(2, 0);
  CHECK(two.dump() == "+ZI\n+IZ\n+XI\n+IX\n");
  CHECK_THROWS_AS(SstrState(0, 0), std::invalid_argument);

  SstrState z(1, 1);
  const auto meas = z.measure(parse_pauli("Z"));
  CHECK(meas.outcome == +1);
  CHECK(meas.deterministic);
  CHECK(z.dump() == "+Z\n+X\n");
}

TEST_CASE("gates rewrite the tableau rows") {
  CHECK(bell(0).dump() == "+XX\n+ZZ\n+ZI\n+IX\n");

  SstrState twice(2, 0);
  twice.apply_h(1);
  twice.apply_h(1);
  CHECK(twice.tableau() == SstrState(2, 0).tableau());

  SstrState s4(1, 0);
  s4.apply_h(0);  // move off the Z eigenbasis first
  const Tableau reference = s4.tableau();
  for (int i = 0; i < 4; ++i) s4.apply_s(0);
  CHECK(s4.tableau() == reference);

  SstrState bad(2, 0);
  CHECK_THROWS_AS(bad.apply_h(2), std::out_of_range);
  CHECK_THROWS_AS(bad.apply_cnot(1, 1), std::invalid_argument);
}

TEST_CASE("value extraction on the bell state") {
  const SstrState state = bell(0);
  // XX * ZZ = -YY sits in the stabilizer group, so -YY reads +1...
  CHECK(state.extract_value(parse_pauli("-YY")) == +1);
  CHECK(state.extract_value(parse_pauli("YY")) == -1);
  // ...and the oracle agrees.
  StateVector psi(2);
  psi.apply_h(0);
  psi.apply_cnot(0, 1);
  CHECK(psi.expectation(parse_pauli("-YY")) == doctest::Approx(1.0));
  // IZ anticommutes with XX: indeterminate.
  CHECK_FALSE(state.extract_value(parse_pauli("IZ")).has_value());

  CHECK(SstrState(1, 0).extract_value(parse_pauli("Z")) == +1);
  CHECK_THROWS_AS(state.extract_value(parse_pauli("II")), std::invalid_argument);
  CHECK_THROWS_AS(state.extract_value(parse_pauli("Z")), std::invalid_argument);
}

TEST_CASE("bell measurement statistics and post-state") {
  int plus = 0;
  const int shots = 4000;
  for (int i = 0; i < shots; ++i) {
    SstrState state = bell(derive_shot_seed(11, static_cast<std::uint64_t>(i)));
    const auto meas = state.measure(parse_pauli("IZ"));
    CHECK_FALSE(meas.deterministic);
    CHECK(meas.pivot == 0);
    if (meas.outcome > 0) ++plus;
    // Post state is fixed by {outcome * IZ, ZZ}.
    PauliElement signed_iz = parse_pauli("IZ");
    if (meas.outcome < 0) signed_iz.negate();
    CHECK(state.extract_value(signed_iz) == +1);
    CHECK(state.extract_value(parse_pauli("ZZ")) == +1);
    CHECK(state.tableau().is_valid_symplectic_basis());
    // Frozen row form: stabilizers (+-)IZ, ZZ; destabilizers XX, XI.
    PauliElement expected_stab = signed_iz;
    CHECK(state.tableau().stabilizers[0] == expected_stab);
    CHECK(state.tableau().stabilizers[1] == parse_pauli("ZZ"));
    CHECK(state.tableau().destabilizers[0] == parse_pauli("XX"));
    CHECK(state.tableau().destabilizers[1] == parse_pauli("XI"));
  }
  CHECK(std::abs(binomial_z(plus, shots, 0.5)) <= kFiveSigma);
}

TEST_CASE("measuring x on a fresh qubit is a fair coin with the right collapse") {
  int plus = 0;
  const int shots = 4000;
  for (int i = 0; i < shots; ++i) {
    SstrState state(1, derive_shot_seed(23, static_cast<std::uint64_t>(i)));
    const auto meas = state.measure(parse_pauli("X"));
    CHECK_FALSE(meas.deterministic);
    if (meas.outcome > 0) ++plus;
    PauliElement expected = parse_pauli("X");
    if (meas.outcome < 0) expected.negate();
    CHECK(state.tableau().stabilizers[0] == expected);
    CHECK(state.tableau().destabilizers[0] == parse_pauli("Z"));
  }
  // The oracle gives exactly 1/2 for X on a fresh qubit.
  CHECK(StateVector(1).measure_pauli(parse_pauli("X")).p_plus == doctest::Approx(0.5));
  CHECK(std::abs(binomial_z(plus, shots, 0.5)) <= kFiveSigma);
}

TEST_CASE("determinate measurements do not consume randomness or change state") {
  SstrState a(1, 77);
  SstrState b(1, 77);
  a.measure(parse_pauli("Z"));   // determinate: must not advance the stream
  const auto ma = a.measure(parse_pauli("X"));
  const auto mb = b.measure(parse_pauli("X"));
  CHECK(ma.outcome == mb.outcome);
}

TEST_CASE("repeatability and invariant preservation on random programs") {
  Rng rng(0xbeef);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const Circuit circuit = test::random_clifford_circuit(n, 20, 0, rng);
    SstrState state(n, rng.next());
    for (const auto& ins : circuit.instructions) state.apply(ins);
    REQUIRE(state.tableau().is_valid_symplectic_basis());

    const PauliElement m = random_pauli(n, rng);
    const auto first = state.measure(m);
    REQUIRE(state.tableau().is_valid_symplectic_basis());
    const auto again = state.measure(m);
    CHECK(again.deterministic);
    CHECK(again.outcome == first.outcome);
    CHECK(state.extract_value(m) == first.outcome);
  }
}

TEST_CASE("per-measurement outcome law matches the oracle on random circuits") {
  Rng rng(0x0dd5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const Circuit circuit = test::random_clifford_circuit(n, 25, 5, rng);

    for (std::uint64_t shot = 0; shot < 20; ++shot) {
      SstrState state(n, derive_shot_seed(trial, shot));
      std::vector<int> outcomes;
      std::vector<bool> deterministic;
      for (const auto& ins : circuit.instructions) {
        if (ins.kind == Instruction::Kind::Measure) {
          const auto meas = state.measure(*ins.observable);
          outcomes.push_back(meas.outcome);
          deterministic.push_back(meas.deterministic);
        } else {
          state.apply(ins);
        }
      }
      const auto probabilities = replay_probabilities(circuit, outcomes);
      REQUIRE(probabilities.size() == outcomes.size());
      for (std::size_t k = 0; k < probabilities.size(); ++k) {
        // Determinate simulator outcomes must be oracle certainties with the
        // same sign; indeterminate ones must be fair coins.
        if (deterministic[k]) {
          CHECK(probabilities[k] == doctest::Approx(1.0));
        } else {
          CHECK(probabilities[k] == doctest::Approx(0.5));
        }
      }
    }
  }
}

TEST_CASE("forced measurements pair with free ones") {
  SstrState free_state = bell(5);
  SstrState forced_state = bell(999);
  const auto free_meas = free_state.measure(parse_pauli("IZ"));
  const auto forced_meas = forced_state.measure_forced(parse_pauli("IZ"), free_meas.outcome);
  CHECK(forced_meas.outcome == free_meas.outcome);
  CHECK(free_state.tableau() == forced_state.tableau());

  // Forcing against a determinate value is an error.
  SstrState z(1, 0);
  CHECK_THROWS_AS(z.measure_forced(parse_pauli("Z"), -1), std::invalid_argument);
  CHECK_THROWS_AS(z.measure_forced(parse_pauli("X"), 0), std::invalid_argument);
}

TEST_CASE("from_rows validates the symplectic basis") {
  CHECK_NOTHROW(SstrState::from_rows({parse_pauli("XX"), parse_pauli("ZZ")},
                                     {parse_pauli("ZI"), parse_pauli("IX")}, 0));
  // Stabilizers that anticommute are rejected.
  CHECK_THROWS_AS(SstrState::from_rows({parse_pauli("XI"), parse_pauli("ZI")},
                                       {parse_pauli("ZI"), parse_pauli("IX")}, 0),
                  std::invalid_argument);
  // Wrong pairing.
  CHECK_THROWS_AS(SstrState::from_rows({parse_pauli("ZI"), parse_pauli("IZ")},
                                       {parse_pauli("IX"), parse_pauli("XI")}, 0),
                  std::invalid_argument);
  // Non-Hermitian row.
  PauliElement odd = parse_pauli("XI");
  odd.set_phase_exponent(1);
  CHECK_THROWS_AS(SstrState::from_rows({odd, parse_pauli("IZ")},
                                       {parse_pauli("ZI"), parse_pauli("IX")}, 0),
                  std::invalid_argument);
}

TEST_CASE("sampled shots are reproducible") {
  const Circuit circuit = demo_circuit("bell");
  const ShotRecord a = sstr_sample_shot(circuit, 1234);
  const ShotRecord b = sstr_sample_shot(circuit, 1234);
  CHECK(a == b);
  REQUIRE(a.outcomes.size() == 1);
  CHECK(a.outcomes[0].first == "IZ");
}

TEST_SUITE_END();
