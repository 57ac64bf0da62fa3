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
#include <string>
#include <vector>

#include "comsim/pauli.hpp"

namespace comsim {

// 2n Hermitian Pauli rows: n stabilizer generators paired with n
// destabilizers. Row pair k satisfies the symplectic-basis conditions:
// stabilizers mutually commute, destabilizers mutually commute, and
// stabilizer i anticommutes with destabilizer j exactly when i == j.
struct Tableau {
  std::vector<PauliElement> stabilizers;
  std::vector<PauliElement> destabilizers;

  // +Z_k stabilizers and +X_k destabilizers: the all-zeros state.
  static Tableau computational_basis(std::size_t num_qubits);

  std::size_t num_qubits() const {
    return stabilizers.empty() ? 0 : stabilizers.front().num_qubits();
  }

  // Conjugate every row by the gate.
  void apply_h(std::size_t qubit);
  void apply_s(std::size_t qubit);
  void apply_cnot(std::size_t control, std::size_t target);

  // Swap row pair i with row pair j in both lists.
  void swap_pair(std::size_t i, std::size_t j);

  // Checks every invariant listed above plus Hermiticity of all rows.
  bool is_valid_symplectic_basis() const;

  // One row per line in Pauli text form, stabilizers then destabilizers.
  std::string dump() const;

  bool operator==(const Tableau& other) const = default;
};

// Shared precondition for measurement-style operations: the observable must
// be Hermitian, non-identity, and act on num_qubits qubits. Throws
// std::invalid_argument otherwise.
void validate_observable(const PauliElement& observable, std::size_t num_qubits);

}  // namespace comsim
