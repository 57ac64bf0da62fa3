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
#include <string>
#include <vector>

#include "comsim/circuit.hpp"
#include "comsim/rng.hpp"
#include "comsim/tableau.hpp"

namespace comsim {

// Decomposition of an observable over the state's symplectic basis:
//
//   M = v * i^w * prod_k S_k^{m_k} * prod_k D_k^{c_k}
//
// with S_k the stabilizer rows, D_k the destabilizer rows, both products in
// ascending k and the stabilizer product on the left. w is 1 exactly when
// the two partial products anticommute, which makes the right-hand side
// Hermitian, so v is always +-1.
struct Expansion {
  int v = 0;
  int w = 0;
  std::vector<bool> m;  // stabilizer exponents, m_k = <M anticommutes with D_k>
  std::vector<bool> c;  // destabilizer exponents, c_k = <M anticommutes with S_k>
};

enum class ComBranch {
  Anticommuting,  // M anticommutes with >= 1 stabilizer: tableau rewritten as in SSTR
  Commuting,      // M commutes with all stabilizers, anticommutes with >= 1 destabilizer
  Stabilized,     // M commutes with every row; unreachable for valid observables
};

struct ComMeasurement {
  int outcome = 0;  // always predict(M); never random given the state
  ComBranch branch = ComBranch::Stabilized;
  std::size_t pivot = 0;  // rewritten row pair (branches A/B)
  int coin = +1;          // the fresh sign applied to the pivot destabilizer
};

// Deterministic extension of the stabilizer tableau: the same 2n rows read
// as a full symplectic basis with all 2n signs significant. Every Hermitian
// Pauli observable has a predetermined outcome v(M); measurements update the
// basis contextually and re-randomize one destabilizer sign, which is what
// enforces the uncertainty of later incompatible measurements.
//
// Randomness consumption, in order: one sign per qubit at random_init, then
// one sign per measurement (none for the unreachable Stabilized branch).
class ComState {
 public:
  // All-zeros state with independent uniform destabilizer signs:
  // stabilizer k is +Z_k, destabilizer k is (+-)X_k.
  static ComState random_init(std::size_t num_qubits, std::uint64_t seed);

  // Arbitrary starting rows; throws std::invalid_argument unless they form
  // a symplectic basis.
  static ComState from_rows(std::vector<PauliElement> stabilizers,
                            std::vector<PauliElement> destabilizers, std::uint64_t seed);

  // Adopts an already-valid tableau together with an in-flight random
  // stream. Validates the tableau.
  static ComState from_tableau(Tableau tableau, Rng rng);

  std::size_t num_qubits() const { return tab_.num_qubits(); }
  const Tableau& tableau() const { return tab_; }
  std::string dump() const { return tab_.dump(); }
  Rng& rng() { return rng_; }

  void apply_h(std::size_t qubit) { tab_.apply_h(qubit); }
  void apply_s(std::size_t qubit) { tab_.apply_s(qubit); }
  void apply_cnot(std::size_t control, std::size_t target) { tab_.apply_cnot(control, target); }
  void apply(const Instruction& instruction);

  // Expansion of the observable over the current basis. O(n^2).
  Expansion expand(const PauliElement& observable) const;

  // The predetermined outcome v(M). Pure: no state change, no randomness.
  int predict(const PauliElement& observable) const;

  // Measurement: outcome predict(M), contextual row update, then a fresh
  // coin re-randomizes the pivot destabilizer sign.
  ComMeasurement measure(const PauliElement& observable);

  // Deterministic variant for paired tests: `coin` replaces the fresh sign.
  ComMeasurement measure_with_coin(const PauliElement& observable, int coin);

 private:
  ComState(Tableau tableau, Rng rng) : tab_(std::move(tableau)), rng_(rng) {}

  struct ExpansionData {
    std::vector<std::uint8_t> m, c;
    bool any_m = false, any_c = false;
    int v = 0;
    int w = 0;
  };
  ExpansionData expand_internal(const PauliElement& observable) const;
  ComMeasurement measure_internal(const PauliElement& observable, std::optional<int> forced_coin);

  Tableau tab_;
  Rng rng_;
};

// One complete shot under the deterministic model: random_init, then gates
// and measurements in program order. Over the seed distribution the
// per-measurement outcome laws match the stabilizer simulator and the dense
// oracle.
ShotRecord com_sample_shot(const Circuit& circuit, std::uint64_t seed);

}  // namespace comsim
