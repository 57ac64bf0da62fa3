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
#include <vector>

#include "comsim/com.hpp"

namespace comsim {

// Pointer-based measurement: instead of collapsing the system directly, a
// one-qubit pointer is appended in a random-sign basis state, entangled with
// the measured qubit by a CNOT, and measured. Rebasing the resulting rows
// and deleting the pointer reproduces the direct measurement update exactly,
// except that the sign re-randomizing the pivot destabilizer is the
// pointer's own initial sign rather than a fresh coin.

struct MicroscopeTrace {
  int initial_pointer_phase = 0;     // sign of the appended pointer destabilizer
  int pointer_outcome = 0;           // predetermined outcome of the pointer measurement
  int branch_d_phase = 0;            // coin consumed by the pointer measurement itself;
                                     // cancels out of everything that is kept
  int final_destabilizer_phase = 0;  // sign carried by the rebased pivot destabilizer,
                                     // relative to the direct update's row
};

struct MicroscopeResult {
  int outcome = 0;
  ComState reduced;
  MicroscopeTrace trace;
  std::size_t pivot = 0;  // row pair rewritten in the reduced state
};

// Appends the pointer as a new last qubit: every row gains a trailing
// identity, plus a +Z stabilizer and a (+-)X destabilizer on the pointer.
// The sign is drawn from the state's stream (the _with_phase variant pins it).
ComState append_pointer(ComState state);
ComState append_pointer_with_phase(ComState state, int phase);

// CNOT from the measured system qubit onto the pointer, applied to every
// row. Requires a freshly appended pointer.
ComState entangle(ComState state, std::size_t system_qubit);

// Measures Z on the pointer, rebases the pivot/pointer row pairs so the
// pointer decouples, checks the decoupling, and drops the pointer qubit.
// One coin is consumed by the pointer measurement (the _with_coin variant
// pins it). Rebase or decoupling failures throw std::logic_error: they mean
// the tableau algebra is broken, not that the input was wrong.
MicroscopeResult measure_via_microscope(ComState entangled);
MicroscopeResult measure_via_microscope_with_coin(ComState entangled, int coin);

// append_pointer + entangle + measure_via_microscope for Z on any qubit.
MicroscopeResult run_full_microscope(ComState state, std::size_t system_qubit);
MicroscopeResult run_full_microscope_forced(ComState state, std::size_t system_qubit,
                                            int pointer_phase, int coin);

// Deterministic Clifford reduction of a Hermitian non-identity observable to
// (+-)Z on a single target qubit: per-qubit S/H letter fixes, then CNOT
// folds onto the last support qubit.
struct ObservableReduction {
  std::vector<Instruction> gates;
  std::size_t target = 0;
  int sign = +1;  // conjugated observable equals sign * Z_target
};
ObservableReduction reduce_to_single_z(const PauliElement& observable);

// Microscope measurement of an arbitrary Hermitian non-identity observable:
// conjugates the state by the reduction circuit, runs the pointer procedure
// on the target qubit, and undoes the conjugation on the reduced state.
MicroscopeResult microscope_measure_observable(ComState state, const PauliElement& observable);

}  // namespace comsim
