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

#include "comsim/com.hpp"

#include <stdexcept>

namespace comsim {

ComState ComState::random_init(std::size_t num_qubits, std::uint64_t seed) {
  Tableau t = Tableau::computational_basis(num_qubits);
  Rng rng(seed);
  for (std::size_t k = 0; k < num_qubits; ++k) {
    if (rng.coin() < 0) {
      t.destabilizers[k].negate();
    }
  }
  return ComState(std::move(t), rng);
}

ComState ComState::from_rows(std::vector<PauliElement> stabilizers,
                             std::vector<PauliElement> destabilizers, std::uint64_t seed) {
  Tableau t;
  t.stabilizers = std::move(stabilizers);
  t.destabilizers = std::move(destabilizers);
  return from_tableau(std::move(t), Rng(seed));
}

ComState ComState::from_tableau(Tableau tableau, Rng rng) {
  if (!tableau.is_valid_symplectic_basis()) {
    throw std::invalid_argument("rows do not form a symplectic basis");
  }
  return ComState(std::move(tableau), rng);
}

void ComState::apply(const Instruction& instruction) {
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

ComState::ExpansionData ComState::expand_internal(const PauliElement& observable) const {
  validate_observable(observable, num_qubits());
  const std::size_t n = num_qubits();
  ExpansionData data;
  data.m.resize(n);
  data.c.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    data.m[k] = static_cast<std::uint8_t>(symplectic_product(observable, tab_.destabilizers[k]));
    data.c[k] = static_cast<std::uint8_t>(symplectic_product(observable, tab_.stabilizers[k]));
    data.any_m |= data.m[k] != 0;
    data.any_c |= data.c[k] != 0;
  }

  PauliElement stab_part = PauliElement::identity(n);
  PauliElement destab_part = PauliElement::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (data.m[k]) stab_part.right_mul(tab_.stabilizers[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (data.c[k]) destab_part.right_mul(tab_.destabilizers[k]);
  }
  data.w = symplectic_product(stab_part, destab_part);

  PauliElement reconstruction = stab_part;
  reconstruction.right_mul(destab_part);
  reconstruction.set_phase_exponent(reconstruction.phase_exponent() + static_cast<unsigned>(data.w));
  if (!reconstruction.same_bits(observable)) {
    throw std::logic_error("symplectic basis does not span the observable");
  }
  const unsigned diff = (observable.phase_exponent() - reconstruction.phase_exponent()) & 3u;
  if (diff & 1u) {
    throw std::logic_error("expansion phase ratio is not real");
  }
  data.v = diff == 0 ? +1 : -1;
  return data;
}

Expansion ComState::expand(const PauliElement& observable) const {
  const ExpansionData data = expand_internal(observable);
  Expansion e;
  e.v = data.v;
  e.w = data.w;
  e.m.assign(data.m.begin(), data.m.end());
  e.c.assign(data.c.begin(), data.c.end());
  return e;
}

int ComState::predict(const PauliElement& observable) const {
  return expand_internal(observable).v;
}

ComMeasurement ComState::measure_internal(const PauliElement& observable,
                                          std::optional<int> forced_coin) {
  if (forced_coin && *forced_coin != 1 && *forced_coin != -1) {
    throw std::invalid_argument("coin must be +1 or -1");
  }
  const ExpansionData e = expand_internal(observable);
  const std::size_t n = num_qubits();
  auto& stabilizers = tab_.stabilizers;
  auto& destabilizers = tab_.destabilizers;

  if (e.any_c) {
    // Same rewrite as the stabilizer simulator, but the outcome is v(M)
    // instead of a coin.
    std::size_t pivot = 0;
    while (!e.c[pivot]) ++pivot;
    const int coin = forced_coin ? *forced_coin : rng_.coin();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == pivot) continue;
      if (e.c[k]) stabilizers[k].left_mul(stabilizers[pivot]);
      if (e.m[k]) destabilizers[k].left_mul(stabilizers[pivot]);
    }
    destabilizers[pivot] = stabilizers[pivot];
    stabilizers[pivot] = observable;
    if (e.v < 0) stabilizers[pivot].negate();
    if (coin < 0) destabilizers[pivot].negate();
    return {e.v, ComBranch::Anticommuting, pivot, coin};
  }

  if (e.any_m) {
    // M is a signed stabilizer-group element. The stabilizers survive; the
    // pivot destabilizer folds into the other anticommuting destabilizers,
    // and the pivot stabilizer is replaced by the signed observable.
    std::size_t pivot = 0;
    while (!e.m[pivot]) ++pivot;
    const int coin = forced_coin ? *forced_coin : rng_.coin();
    for (std::size_t k = 0; k < n; ++k) {
      if (k != pivot && e.m[k]) destabilizers[k].left_mul(destabilizers[pivot]);
    }
    stabilizers[pivot] = observable;
    if (e.v < 0) stabilizers[pivot].negate();
    if (coin < 0) destabilizers[pivot].negate();
    return {e.v, ComBranch::Commuting, pivot, coin};
  }

  // Commutes with all 2n rows. The symplectic form is non-degenerate, so
  // only +-identity lands here, and validate_observable already rejected it.
  // Kept as a guarded no-op.
  return {e.v, ComBranch::Stabilized, 0, +1};
}

ComMeasurement ComState::measure(const PauliElement& observable) {
  return measure_internal(observable, std::nullopt);
}

ComMeasurement ComState::measure_with_coin(const PauliElement& observable, int coin) {
  return measure_internal(observable, coin);
}

ShotRecord com_sample_shot(const Circuit& circuit, std::uint64_t seed) {
  ComState state = ComState::random_init(circuit.num_qubits, seed);
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
