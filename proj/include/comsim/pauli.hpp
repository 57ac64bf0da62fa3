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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace comsim {

// Exponent of i picked up when multiplying two single-qubit letters,
//
//   A * B = i^g * C,   A = i^{x1 z1} X^{x1} Z^{z1},  B, C likewise,
//
// with C carrying bits (x1^x2, z1^z2). Under this encoding every letter
// I, X, Y, Z is its own Hermitian matrix, so g is 0, 1 or 3 (never 2).
// The 16 cases are validated against dense matrix arithmetic in tests.
constexpr unsigned pauli_mul_phase_exponent(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;                                        // I * B = B
  if (x1 && z1) return (z2 && !x2) ? 1u : ((x2 && !z2) ? 3u : 0);  // Y*Z=iX, Y*X=-iZ
  if (x1) return (x2 && z2) ? 1u : ((z2 && !x2) ? 3u : 0);         // X*Y=iZ, X*Z=-iY
  return (x2 && !z2) ? 1u : ((x2 && z2) ? 3u : 0);                 // Z*X=iY, Z*Y=-iX
}

// An n-qubit Pauli group element
//
//   i^s * (X)_k  i^{x_k z_k} X^{x_k} Z^{z_k},
//
// stored as two packed bit vectors (64 qubits per word) plus the phase
// exponent s (mod 4). Single-qubit letters I, X, Y, Z all carry s = 0;
// an element is Hermitian exactly when s is even. Qubit 0 is the leftmost
// letter of the text form.
//
// Values are immutable once built by callers that share them; all mutating
// members are used on locally owned copies. Phases of products are exact.
class PauliElement {
 public:
  // Identity element on num_qubits qubits.
  explicit PauliElement(std::size_t num_qubits);

  static PauliElement identity(std::size_t num_qubits) { return PauliElement(num_qubits); }

  // 'I', 'X', 'Y' or 'Z' at position qubit, identity elsewhere, + sign.
  static PauliElement single(std::size_t num_qubits, std::size_t qubit, char letter);

  std::size_t num_qubits() const { return num_qubits_; }

  bool x_bit(std::size_t qubit) const;
  bool z_bit(std::size_t qubit) const;
  void set_x(std::size_t qubit, bool value);
  void set_z(std::size_t qubit, bool value);

  unsigned phase_exponent() const { return phase_; }
  void set_phase_exponent(unsigned exponent) { phase_ = exponent & 3u; }

  bool is_hermitian() const { return (phase_ & 1u) == 0; }

  // True when x = z = 0 (any phase).
  bool is_identity() const;

  // +1 or -1; requires a Hermitian element.
  int sign() const;

  void negate() { phase_ = (phase_ + 2u) & 3u; }

  // this <- other * this, exact phase. Word-parallel.
  void left_mul(const PauliElement& other);
  // this <- this * other.
  void right_mul(const PauliElement& other);

  // In-place Clifford conjugation, this <- U this U^dag.
  void conjugate_h(std::size_t qubit);
  void conjugate_s(std::size_t qubit);
  void conjugate_cnot(std::size_t control, std::size_t target);

  // Compares x/z bits only, ignoring the phase.
  bool same_bits(const PauliElement& other) const;

  bool operator==(const PauliElement& other) const = default;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

 private:
  void check_qubit(std::size_t qubit) const;

  std::size_t num_qubits_;
  unsigned phase_;  // s mod 4
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

// a * b as matrices, exact phase.
PauliElement multiply(const PauliElement& a, const PauliElement& b);

// Sum_k (x_k z'_k - z_k x'_k) mod 2: 0 iff a and b commute. O(n/64) words.
int symplectic_product(const PauliElement& a, const PauliElement& b);

inline bool commute(const PauliElement& a, const PauliElement& b) {
  return symplectic_product(a, b) == 0;
}

// Value-returning conjugations U p U^dag for U in {H, S, CNOT}.
PauliElement conjugate_h(PauliElement element, std::size_t qubit);
PauliElement conjugate_s(PauliElement element, std::size_t qubit);
PauliElement conjugate_cnot(PauliElement element, std::size_t control, std::size_t target);

// Text form `[+-]?[IXYZ]+`, qubit 0 leftmost, default sign +. "Y" parses to
// x = z = 1 with s = 0. Throws std::invalid_argument on malformed input.
PauliElement parse_pauli(std::string_view text);

// Inverse of parse_pauli for Hermitian elements; always emits the sign.
// Non-Hermitian phases render as "+i" / "-i" prefixes (not parseable back;
// observables in circuits are Hermitian by construction).
std::string format_pauli(const PauliElement& element);

}  // namespace comsim
