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

#include "comsim/microscope.hpp"

#include <optional>
#include <stdexcept>

namespace comsim {

namespace {

PauliElement with_extra_qubit(const PauliElement& row) {
  PauliElement wide(row.num_qubits() + 1);
  for (std::size_t q = 0; q < row.num_qubits(); ++q) {
    wide.set_x(q, row.x_bit(q));
    wide.set_z(q, row.z_bit(q));
  }
  wide.set_phase_exponent(row.phase_exponent());
  return wide;
}

// Drops the last column; the caller decides whether that column mattered.
PauliElement without_last_qubit(const PauliElement& row) {
  PauliElement narrow(row.num_qubits() - 1);
  for (std::size_t q = 0; q + 1 < row.num_qubits(); ++q) {
    narrow.set_x(q, row.x_bit(q));
    narrow.set_z(q, row.z_bit(q));
  }
  narrow.set_phase_exponent(row.phase_exponent());
  return narrow;
}

bool is_single_x(const PauliElement& row, std::size_t qubit) {
  PauliElement expected = PauliElement::single(row.num_qubits(), qubit, 'X');
  return row.same_bits(expected);
}

// A freshly appended pointer: +Z stabilizer and (+-)X destabilizer on the
// last qubit, both acting trivially elsewhere.
void require_fresh_pointer(const Tableau& tableau) {
  const std::size_t n = tableau.stabilizers.size();
  if (n < 2) {
    throw std::invalid_argument("pointer not present: need at least two qubits");
  }
  const PauliElement& stab = tableau.stabilizers[n - 1];
  const PauliElement& destab = tableau.destabilizers[n - 1];
  if (!(stab == PauliElement::single(n, n - 1, 'Z')) || !is_single_x(destab, n - 1)) {
    throw std::invalid_argument("pointer not present: last row pair is not a fresh pointer");
  }
}

// After the entangling CNOT the pointer stabilizer is +Z_q Z_pointer and the
// pointer destabilizer is still (+-)X_pointer.
void require_entangled_pointer(const Tableau& tableau) {
  const std::size_t n = tableau.stabilizers.size();
  if (n < 2) {
    throw std::invalid_argument("not an entangled pointer configuration");
  }
  const PauliElement& stab = tableau.stabilizers[n - 1];
  const PauliElement& destab = tableau.destabilizers[n - 1];
  if (!is_single_x(destab, n - 1)) {
    throw std::invalid_argument("pointer destabilizer is not a single X");
  }
  if (stab.phase_exponent() != 0 || !stab.z_bit(n - 1)) {
    throw std::invalid_argument("pointer stabilizer is not entangled with the system");
  }
  std::size_t z_count = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (stab.x_bit(q)) {
      throw std::invalid_argument("pointer stabilizer carries an X component");
    }
    if (stab.z_bit(q)) ++z_count;
  }
  if (z_count != 2) {
    throw std::invalid_argument("pointer stabilizer must couple exactly one system qubit");
  }
}

}  // namespace

ComState append_pointer(ComState state) {
  const int phase = state.rng().coin();
  return append_pointer_with_phase(std::move(state), phase);
}

ComState append_pointer_with_phase(ComState state, int phase) {
  if (phase != 1 && phase != -1) {
    throw std::invalid_argument("pointer phase must be +1 or -1");
  }
  const std::size_t n = state.num_qubits();
  Tableau wide;
  wide.stabilizers.reserve(n + 1);
  wide.destabilizers.reserve(n + 1);
  for (const auto& row : state.tableau().stabilizers) {
    wide.stabilizers.push_back(with_extra_qubit(row));
  }
  for (const auto& row : state.tableau().destabilizers) {
    wide.destabilizers.push_back(with_extra_qubit(row));
  }
  wide.stabilizers.push_back(PauliElement::single(n + 1, n, 'Z'));
  PauliElement pointer_destab = PauliElement::single(n + 1, n, 'X');
  if (phase < 0) {
    pointer_destab.negate();
  }
  wide.destabilizers.push_back(pointer_destab);
  return ComState::from_tableau(std::move(wide), state.rng());
}

ComState entangle(ComState state, std::size_t system_qubit) {
  require_fresh_pointer(state.tableau());
  const std::size_t pointer = state.num_qubits() - 1;
  if (system_qubit >= pointer) {
    throw std::invalid_argument("system qubit index out of range");
  }
  state.apply_cnot(system_qubit, pointer);
  return state;
}

namespace {

MicroscopeResult measure_pointer(ComState state, std::optional<int> forced_coin) {
  require_entangled_pointer(state.tableau());
  const std::size_t n_total = state.num_qubits();
  const std::size_t pointer = n_total - 1;
  const std::size_t last = n_total - 1;  // row pair of the pointer

  const int pointer_phase = state.tableau().destabilizers[last].sign();
  const Tableau before = state.tableau();

  const PauliElement pointer_z = PauliElement::single(n_total, pointer, 'Z');
  const ComMeasurement meas = forced_coin ? state.measure_with_coin(pointer_z, *forced_coin)
                                          : state.measure(pointer_z);
  if (meas.branch == ComBranch::Stabilized || meas.pivot >= last) {
    throw std::logic_error("pointer measurement did not pivot on a system row");
  }

  Tableau t = state.tableau();
  // Exchange generators: the pointer-pair stabilizer absorbs the pivot
  // stabilizer (leaving the signed system observable), and the pivot
  // destabilizer absorbs the pointer destabilizer (leaving a pointer-only
  // X). Both exchanges preserve the generated groups.
  t.stabilizers[last].left_mul(t.stabilizers[meas.pivot]);
  t.destabilizers[meas.pivot].right_mul(t.destabilizers[last]);
  if (!commute(t.stabilizers[last], t.destabilizers[meas.pivot])) {
    throw std::logic_error("generator exchange broke the symplectic pairing");
  }
  t.swap_pair(meas.pivot, last);

  // The retained rows must have decoupled from the pointer completely.
  for (std::size_t k = 0; k < last; ++k) {
    if (t.stabilizers[k].x_bit(pointer) || t.stabilizers[k].z_bit(pointer) ||
        t.destabilizers[k].x_bit(pointer) || t.destabilizers[k].z_bit(pointer)) {
      throw std::logic_error("retained row still touches the pointer qubit");
    }
  }
  for (std::size_t q = 0; q < pointer; ++q) {
    if (t.stabilizers[last].x_bit(q) || t.stabilizers[last].z_bit(q) ||
        t.destabilizers[last].x_bit(q) || t.destabilizers[last].z_bit(q)) {
      throw std::logic_error("pointer row still touches the system");
    }
  }

  Tableau reduced;
  reduced.stabilizers.reserve(last);
  reduced.destabilizers.reserve(last);
  for (std::size_t k = 0; k < last; ++k) {
    reduced.stabilizers.push_back(without_last_qubit(t.stabilizers[k]));
    reduced.destabilizers.push_back(without_last_qubit(t.destabilizers[k]));
  }

  MicroscopeResult result{meas.outcome, ComState::from_tableau(std::move(reduced), state.rng()),
                          MicroscopeTrace{}, meas.pivot};

  // The retained pivot destabilizer equals (phase) * R where R is the row
  // the direct update would produce before its own re-randomization: the
  // old pivot stabilizer or destabilizer, depending on the branch.
  const PauliElement& reference_row = meas.branch == ComBranch::Anticommuting
                                          ? before.stabilizers[meas.pivot]
                                          : before.destabilizers[meas.pivot];
  PauliElement ratio = result.reduced.tableau().destabilizers[meas.pivot];
  ratio.right_mul(without_last_qubit(reference_row));
  if (!ratio.is_identity()) {
    throw std::logic_error("retained destabilizer is not proportional to the direct row");
  }

  result.trace.initial_pointer_phase = pointer_phase;
  result.trace.pointer_outcome = meas.outcome;
  result.trace.branch_d_phase = meas.coin;
  result.trace.final_destabilizer_phase = ratio.sign();
  return result;
}

}  // namespace

MicroscopeResult measure_via_microscope(ComState entangled) {
  return measure_pointer(std::move(entangled), std::nullopt);
}

MicroscopeResult measure_via_microscope_with_coin(ComState entangled, int coin) {
  return measure_pointer(std::move(entangled), coin);
}

MicroscopeResult run_full_microscope(ComState state, std::size_t system_qubit) {
  return measure_via_microscope(entangle(append_pointer(std::move(state)), system_qubit));
}

MicroscopeResult run_full_microscope_forced(ComState state, std::size_t system_qubit,
                                            int pointer_phase, int coin) {
  return measure_via_microscope_with_coin(
      entangle(append_pointer_with_phase(std::move(state), pointer_phase), system_qubit), coin);
}

ObservableReduction reduce_to_single_z(const PauliElement& observable) {
  validate_observable(observable, observable.num_qubits());
  ObservableReduction reduction;
  PauliElement current = observable;
  const std::size_t n = current.num_qubits();

  // Rotate every non-identity letter to Z.
  for (std::size_t q = 0; q < n; ++q) {
    if (!current.x_bit(q)) continue;
    if (current.z_bit(q)) {
      reduction.gates.push_back({Instruction::Kind::S, q, 0, std::nullopt, ""});
      current.conjugate_s(q);
    }
    reduction.gates.push_back({Instruction::Kind::H, q, 0, std::nullopt, ""});
    current.conjugate_h(q);
  }

  // Fold the Z string onto its last support qubit.
  std::size_t target = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (current.z_bit(q)) target = q;
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (q != target && current.z_bit(q)) {
      reduction.gates.push_back({Instruction::Kind::Cnot, q, target, std::nullopt, ""});
      current.conjugate_cnot(q, target);
    }
  }

  if (!current.same_bits(PauliElement::single(n, target, 'Z'))) {
    throw std::logic_error("observable reduction did not land on a single Z");
  }
  reduction.target = target;
  reduction.sign = current.sign();
  return reduction;
}

MicroscopeResult microscope_measure_observable(ComState state, const PauliElement& observable) {
  validate_observable(observable, state.num_qubits());
  const ObservableReduction reduction = reduce_to_single_z(observable);
  for (const Instruction& gate : reduction.gates) {
    state.apply(gate);
  }

  MicroscopeResult result = run_full_microscope(std::move(state), reduction.target);

  // Undo the conjugation on the reduced state: inverses in reverse order
  // (H and CNOT are involutions, S inverts as three applications).
  for (auto it = reduction.gates.rbegin(); it != reduction.gates.rend(); ++it) {
    switch (it->kind) {
      case Instruction::Kind::H:
        result.reduced.apply_h(it->q0);
        break;
      case Instruction::Kind::S:
        result.reduced.apply_s(it->q0);
        result.reduced.apply_s(it->q0);
        result.reduced.apply_s(it->q0);
        break;
      case Instruction::Kind::Cnot:
        result.reduced.apply_cnot(it->q0, it->q1);
        break;
      case Instruction::Kind::Measure:
        throw std::logic_error("reduction circuit cannot contain measurements");
    }
  }
  result.outcome = reduction.sign * result.outcome;
  return result;
}

}  // namespace comsim
