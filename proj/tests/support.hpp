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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "comsim/circuit.hpp"
#include "comsim/com.hpp"
#include "comsim/pauli.hpp"
#include "comsim/rng.hpp"
#include "comsim/sstr.hpp"

namespace comsim::test {

constexpr double kFiveSigma = 5.0;

inline double binomial_z(std::uint64_t count, std::uint64_t trials, double p) {
  const double expected = static_cast<double>(trials) * p;
  return (static_cast<double>(count) - expected) / std::sqrt(expected * (1.0 - p));
}

// Uniform random element; Hermitian elements get phase 0 or 2, otherwise any
// of the four phases.
inline PauliElement random_pauli(std::size_t n, Rng& rng, bool hermitian = true,
                                 bool allow_identity = false) {
  for (;;) {
    PauliElement p(n);
    bool nontrivial = false;
    for (std::size_t q = 0; q < n; ++q) {
      const std::uint64_t bits = rng.next();
      p.set_x(q, bits & 1);
      p.set_z(q, bits & 2);
      nontrivial |= (bits & 3) != 0;
    }
    if (!nontrivial && !allow_identity) {
      continue;
    }
    const unsigned phase = hermitian ? 2u * static_cast<unsigned>(rng.below(2))
                                     : static_cast<unsigned>(rng.below(4));
    p.set_phase_exponent(phase);
    return p;
  }
}

// Random gate-and-measure program. Gates are uniform over {H, S, CNOT}
// (H/S only when n == 1); measurement positions are uniform over the
// instruction list; observables are random Hermitian non-identity strings.
inline Circuit random_clifford_circuit(std::size_t n, std::size_t depth,
                                       std::size_t num_measurements, Rng& rng) {
  Circuit circuit;
  circuit.num_qubits = n;
  for (std::size_t d = 0; d < depth; ++d) {
    Instruction ins;
    const std::uint64_t kind = rng.below(n > 1 ? 3 : 2);
    if (kind == 0) {
      ins.kind = Instruction::Kind::H;
      ins.q0 = rng.below(n);
    } else if (kind == 1) {
      ins.kind = Instruction::Kind::S;
      ins.q0 = rng.below(n);
    } else {
      ins.kind = Instruction::Kind::Cnot;
      ins.q0 = rng.below(n);
      ins.q1 = (ins.q0 + 1 + rng.below(n - 1)) % n;
    }
    circuit.instructions.push_back(ins);
  }
  for (std::size_t m = 0; m < num_measurements; ++m) {
    Instruction ins;
    ins.kind = Instruction::Kind::Measure;
    ins.observable = random_pauli(n, rng);
    circuit.instructions.insert(
        circuit.instructions.begin() +
            static_cast<std::ptrdiff_t>(rng.below(circuit.instructions.size() + 1)),
        std::move(ins));
  }
  std::size_t ordinal = 0;
  for (auto& ins : circuit.instructions) {
    if (ins.kind == Instruction::Kind::Measure) {
      ins.label = "m" + std::to_string(++ordinal);
    }
  }
  return circuit;
}

// Random valid model state: random initial signs, a few layers of random
// gates, then a couple of measurements to move the basis off the initial
// form.
inline ComState random_com_state(std::size_t n, std::uint64_t seed, std::size_t depth = 20,
                                 std::size_t num_measurements = 2) {
  ComState state = ComState::random_init(n, seed);
  Rng rng(splitmix64(seed));
  for (std::size_t d = 0; d < depth; ++d) {
    const std::uint64_t kind = rng.below(n > 1 ? 3 : 2);
    if (kind == 0) {
      state.apply_h(rng.below(n));
    } else if (kind == 1) {
      state.apply_s(rng.below(n));
    } else {
      const std::size_t control = rng.below(n);
      state.apply_cnot(control, (control + 1 + rng.below(n - 1)) % n);
    }
  }
  for (std::size_t m = 0; m < num_measurements; ++m) {
    state.measure(random_pauli(n, rng));
  }
  return state;
}

// Bell-pair model state with explicit signs: stabilizers {XX, ZZ},
// destabilizers {a ZI, b IX}.
inline ComState bell_com_state(int a, int b, std::uint64_t seed) {
  PauliElement d0 = parse_pauli("ZI");
  if (a < 0) d0.negate();
  PauliElement d1 = parse_pauli("IX");
  if (b < 0) d1.negate();
  return ComState::from_rows({parse_pauli("XX"), parse_pauli("ZZ")}, {d0, d1}, seed);
}

}  // namespace comsim::test
