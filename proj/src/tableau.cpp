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

#include "comsim/tableau.hpp"

#include <stdexcept>
#include <utility>

namespace comsim {

Tableau Tableau::computational_basis(std::size_t num_qubits) {
  if (num_qubits == 0) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
  Tableau t;
  t.stabilizers.reserve(num_qubits);
  t.destabilizers.reserve(num_qubits);
  for (std::size_t k = 0; k < num_qubits; ++k) {
    t.stabilizers.push_back(PauliElement::single(num_qubits, k, 'Z'));
    t.destabilizers.push_back(PauliElement::single(num_qubits, k, 'X'));
  }
  return t;
}

void Tableau::apply_h(std::size_t qubit) {
  for (auto& row : stabilizers) row.conjugate_h(qubit);
  for (auto& row : destabilizers) row.conjugate_h(qubit);
}

void Tableau::apply_s(std::size_t qubit) {
  for (auto& row : stabilizers) row.conjugate_s(qubit);
  for (auto& row : destabilizers) row.conjugate_s(qubit);
}

void Tableau::apply_cnot(std::size_t control, std::size_t target) {
  for (auto& row : stabilizers) row.conjugate_cnot(control, target);
  for (auto& row : destabilizers) row.conjugate_cnot(control, target);
}

void Tableau::swap_pair(std::size_t i, std::size_t j) {
  if (i >= stabilizers.size() || j >= stabilizers.size()) {
    throw std::out_of_range("row pair index out of range");
  }
  std::swap(stabilizers[i], stabilizers[j]);
  std::swap(destabilizers[i], destabilizers[j]);
}

bool Tableau::is_valid_symplectic_basis() const {
  const std::size_t n = stabilizers.size();
  if (n == 0 || destabilizers.size() != n) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (stabilizers[i].num_qubits() != n || destabilizers[i].num_qubits() != n) {
      return false;
    }
    if (!stabilizers[i].is_hermitian() || !destabilizers[i].is_hermitian()) {
      return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (symplectic_product(stabilizers[i], stabilizers[j]) != 0) return false;
      if (symplectic_product(destabilizers[i], destabilizers[j]) != 0) return false;
      const int expected = (i == j) ? 1 : 0;
      if (symplectic_product(stabilizers[i], destabilizers[j]) != expected) return false;
    }
  }
  return true;
}

std::string Tableau::dump() const {
  std::string out;
  for (const auto& row : stabilizers) {
    out += format_pauli(row);
    out += '\n';
  }
  for (const auto& row : destabilizers) {
    out += format_pauli(row);
    out += '\n';
  }
  return out;
}

void validate_observable(const PauliElement& observable, std::size_t num_qubits) {
  if (observable.num_qubits() != num_qubits) {
    throw std::invalid_argument("observable acts on " + std::to_string(observable.num_qubits()) +
                                " qubits, state has " + std::to_string(num_qubits));
  }
  if (!observable.is_hermitian()) {
    throw std::invalid_argument("observable must be Hermitian (even phase exponent)");
  }
  if (observable.is_identity()) {
    throw std::invalid_argument("identity is not a measurable observable");
  }
}

}  // namespace comsim
