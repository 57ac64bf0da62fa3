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

#include "comsim/sstr.hpp"

#include <stdexcept>

namespace comsim {

SstrState::SstrState(std::size_t num_qubits, std::uint64_t seed)
    : tab_(Tableau::computational_basis(num_qubits)), rng_(seed) {}

SstrState SstrState::from_rows(std::vector<PauliElement> stabilizers,
                               std::vector<PauliElement> destabilizers, std::uint64_t seed) {
  Tableau t;
  t.stabilizers = std::move(stabilizers);
  t.destabilizers = std::move(destabilizers);
  if (!t.is_valid_symplectic_basis()) {
    throw std::invalid_argument("rows do not form a symplectic basis");
  }
  return SstrState(std::move(t), Rng(seed));
}

void SstrState::apply(const Instruction& instruction) {
  switch (instruction.kind) {
    case Instruction::Kind::H:
      apply_h(instruction.q0);
      return;
    case Instruction::Kind::S:
      apply_s(instruction.q0);
      return;
    case Instruction::Kind::Cnot:
      apply_cnot(instruction.q0, instruction.q1);
      return;
    case Instruction::Kind::Measure:
      throw std::invalid_argument("use measure() for measurement instructions");
  }
  throw std::logic_error("unreachable instruction kind");
}

// The observable commutes with every stabilizer, so its bits lie in the span
// of the stabilizer rows with coefficients m_k given by anticommutation with
// the paired destabilizers. The outcome is the phase of the observable
// relative to that product.
int SstrState::determinate_value(const PauliElement& observable) const {
  const std::size_t n = num_qubits();
  PauliElement product = PauliElement::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (symplectic_product(observable, tab_.destabilizers[k]) != 0) {
      product.right_mul(tab_.stabilizers[k]);
    }
  }
  if (!product.same_bits(observable)) {
    throw std::logic_error("stabilizer rows do not span a commuting observable");
  }
  const unsigned diff = (observable.phase_exponent() - product.phase_exponent()) & 3u;
  if (diff & 1u) {
    throw std::logic_error("outcome phase is not real");
  }
  return diff == 0 ? +1 : -1;
}

std::optional<int> SstrState::extract_value(const PauliElement& observable) const {
  validate_observable(observable, num_qubits());
  for (const auto& stabilizer : tab_.stabilizers) {
    if (symplectic_product(observable, stabilizer) != 0) {
      return std::nullopt;
    }
  }
  return determinate_value(observable);
}

SstrMeasurement SstrState::measure_internal(const PauliElement& observable,
                                            std::optional<int> forced) {
  validate_observable(observable, num_qubits());
  if (forced && *forced != 1 && *forced != -1) {
    throw std::invalid_argument("forced outcome must be +1 or -1");
  }

  const std::size_t n = num_qubits();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::uint8_t> anti(n, 0);
  std::size_t pivot = kNone;
  for (std::size_t k = 0; k < n; ++k) {
    anti[k] = static_cast<std::uint8_t>(symplectic_product(observable, tab_.stabilizers[k]));
    if (anti[k] && pivot == kNone) {
      pivot = k;
    }
  }

  if (pivot == kNone) {
    const int value = determinate_value(observable);
    if (forced && *forced != value) {
      throw std::invalid_argument("forced outcome contradicts the determinate value");
    }
    return {value, true, 0};
  }

  const int outcome = forced ? *forced : rng_.coin();
  auto& stabilizers = tab_.stabilizers;
  auto& destabilizers = tab_.destabilizers;

  // Fold the pivot into every other anticommuting row, then retire it: the
  // old pivot becomes the new destabilizer and the signed observable the new
  // stabilizer of the pair.
  for (std::size_t k = 0; k < n; ++k) {
    if (k == pivot) continue;
    if (anti[k]) {
      stabilizers[k].left_mul(stabilizers[pivot]);
    }
    if (symplectic_product(observable, destabilizers[k]) != 0) {
      destabilizers[k].left_mul(stabilizers[pivot]);
    }
  }
  destabilizers[pivot] = stabilizers[pivot];
  stabilizers[pivot] = observable;
  if (outcome < 0) {
    stabilizers[pivot].negate();
  }
  return {outcome, false, pivot};
}

SstrMeasurement SstrState::measure(const PauliElement& observable) {
  return measure_internal(observable, std::nullopt);
}

SstrMeasurement SstrState::measure_forced(const PauliElement& observable, int outcome) {
  return measure_internal(observable, outcome);
}

ShotRecord sstr_sample_shot(const Circuit& circuit, std::uint64_t seed) {
  SstrState state(circuit.num_qubits, seed);
  ShotRecord record{seed, {}};
  for (const Instruction& ins : circuit.instructions) {
    if (ins.kind == Instruction::Kind::Measure) {
      record.outcomes.emplace_back(ins.label, state.measure(*ins.observable).outcome);
    } else {
      state.apply(ins);
    }
  }
  return record;
}

}  // namespace comsim
