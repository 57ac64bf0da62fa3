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

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "comsim/circuit.hpp"
#include "comsim/pauli.hpp"

namespace comsim {

// Brute-force dense reference for small qubit counts. Everything here is a
// test fixture, not a performance artifact: exact Born-rule probabilities,
// Pauli expectations, and dense matrix forms used as ground truth by the
// differential tests.

inline constexpr std::size_t kDefaultOracleCap = 12;

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& message) : std::runtime_error(message) {}
};

// Dense 2^n x 2^n matrix of a Pauli element, basis ordered with qubit 0 as
// the most significant bit (qubit 0 is the leftmost tensor factor).
Eigen::MatrixXcd pauli_matrix(const PauliElement& element, std::size_t cap = kDefaultOracleCap);

struct PauliCollapse;

class StateVector {
 public:
  // |0...0> on num_qubits qubits.
  explicit StateVector(std::size_t num_qubits, std::size_t cap = kDefaultOracleCap);

  // Takes ownership of a normalized amplitude vector of length 2^n.
  static StateVector from_amplitudes(Eigen::VectorXcd amplitudes, std::size_t cap = kDefaultOracleCap);

  std::size_t num_qubits() const { return num_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

  void apply_h(std::size_t qubit);
  void apply_s(std::size_t qubit);
  void apply_cnot(std::size_t control, std::size_t target);
  // Gate instructions only; Measure is rejected.
  void apply(const Instruction& instruction);

  // M |psi> without building the dense matrix.
  Eigen::VectorXcd applied_pauli(const PauliElement& observable) const;

  // <psi| M |psi>, real for Hermitian M.
  double expectation(const PauliElement& observable) const;

  // Projective measurement (I +- M)/2 of a Hermitian non-identity Pauli.
  PauliCollapse measure_pauli(const PauliElement& observable) const;

 private:
  StateVector() = default;

  std::size_t num_qubits_ = 0;
  Eigen::VectorXcd amplitudes_;
};

struct PauliCollapse {
  double p_plus = 0.0;
  std::optional<StateVector> plus;   // absent when p_plus is (numerically) 0
  std::optional<StateVector> minus;  // absent when p_plus is (numerically) 1
};

// Exact joint outcome distribution of a circuit, branching on every
// measurement. Keys are strings of '+'/'-' per measurement in program order;
// values sum to 1 within 1e-9 and every branch probability is 0, 1/2 or 1.
std::map<std::string, double> run_circuit_distribution(const Circuit& circuit,
                                                       std::size_t cap = kDefaultOracleCap);

// Conditional probability of each recorded outcome given the previous ones,
// walking the single branch the record describes. Stops early after an
// impossible outcome (probability 0); each entry is 0, 1/2 or 1.
std::vector<double> replay_probabilities(const Circuit& circuit, const std::vector<int>& outcomes,
                                         std::size_t cap = kDefaultOracleCap);

// Samples one shot from the exact distribution. The seeded stream is
// consumed one coin per 50/50 measurement, in program order.
ShotRecord oracle_sample_shot(const Circuit& circuit, std::uint64_t seed,
                              std::size_t cap = kDefaultOracleCap);

}  // namespace comsim
