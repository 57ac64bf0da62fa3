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
#include <optional>
#include <string>

#include "comsim/circuit.hpp"
#include "comsim/rng.hpp"
#include "comsim/tableau.hpp"

namespace comsim {

struct SstrMeasurement {
  int outcome = 0;            // +-1
  bool deterministic = false; // true: commuted with every stabilizer, no update
  std::size_t pivot = 0;      // rewritten row pair (valid when !deterministic)
};

// Stabilizer tableau simulator. The tableau rows represent the quantum state
// through its stabilizer group; destabilizer signs are carried but never
// read. Randomness: one coin per indeterminate measurement, in program
// order, from the state's seeded stream.
//
// States are single-threaded during mutation and may be moved between
// threads; shot sampling runs embarrassingly parallel over per-shot seeds.
class SstrState {
 public:
  // |0...0>: +Z_k stabilizers, +X_k destabilizers.
  SstrState(std::size_t num_qubits, std::uint64_t seed);

  // Arbitrary starting tableau; throws std::invalid_argument unless the rows
  // form a symplectic basis.
  static SstrState from_rows(std::vector<PauliElement> stabilizers,
                             std::vector<PauliElement> destabilizers, std::uint64_t seed);

  std::size_t num_qubits() const { return tab_.num_qubits(); }
  const Tableau& tableau() const { return tab_; }
  std::string dump() const { return tab_.dump(); }

  void apply_h(std::size_t qubit) { tab_.apply_h(qubit); }
  void apply_s(std::size_t qubit) { tab_.apply_s(qubit); }
  void apply_cnot(std::size_t control, std::size_t target) { tab_.apply_cnot(control, target); }
  void apply(const Instruction& instruction);

  // +-1 when the observable commutes with every stabilizer generator (it is
  // then a signed stabilizer-group element), std::nullopt otherwise. O(n^2).
  std::optional<int> extract_value(const PauliElement& observable) const;

  // Projective measurement. Determinate observables return their value and
  // leave the state untouched; otherwise the outcome is a fresh coin and the
  // tableau is rewritten around the lowest-index anticommuting stabilizer.
  SstrMeasurement measure(const PauliElement& observable);

  // Deterministic variant for paired tests: uses `outcome` instead of the
  // coin. Throws if the observable is determinate with a different value.
  SstrMeasurement measure_forced(const PauliElement& observable, int outcome);

 private:
  SstrState(Tableau tableau, Rng rng) : tab_(std::move(tableau)), rng_(rng) {}

  SstrMeasurement measure_internal(const PauliElement& observable, std::optional<int> forced);
  int determinate_value(const PauliElement& observable) const;

  Tableau tab_;
  Rng rng_;
};

// One complete shot: fresh |0...0> state, gates and measurements in program
// order. Identical (circuit, seed) pairs give identical records.
ShotRecord sstr_sample_shot(const Circuit& circuit, std::uint64_t seed);

}  // namespace comsim
