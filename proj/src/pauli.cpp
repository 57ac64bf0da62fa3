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

#include "comsim/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace comsim {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t num_qubits) {
  return (num_qubits + kWordBits - 1) / kWordBits;
}

void check_same_width(const PauliElement& a, const PauliElement& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("Pauli elements act on different qubit counts: " +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()));
  }
}

// Sum over qubits of the i-exponent contributed to the product a * b,
// mod 4. Word-parallel: `plus` marks qubits contributing +i, `minus`
// marks qubits contributing -i; every term keeps at least one plain
// factor from each operand, so unused bits past num_qubits stay clear.
unsigned product_phase_delta(const PauliElement& a, const PauliElement& b) {
  const auto& x1 = a.x_words();
  const auto& z1 = a.z_words();
  const auto& x2 = b.x_words();
  const auto& z2 = b.z_words();
  long long total = 0;
  for (std::size_t w = 0; w < x1.size(); ++w) {
    const std::uint64_t plus = (x1[w] & z1[w] & z2[w] & ~x2[w]) |
                               (x1[w] & ~z1[w] & x2[w] & z2[w]) |
                               (~x1[w] & z1[w] & x2[w] & ~z2[w]);
    const std::uint64_t minus = (x1[w] & z1[w] & x2[w] & ~z2[w]) |
                                (x1[w] & ~z1[w] & ~x2[w] & z2[w]) |
                                (~x1[w] & z1[w] & x2[w] & z2[w]);
    total += std::popcount(plus) - std::popcount(minus);
  }
  return static_cast<unsigned>(((total % 4) + 4) % 4);
}

}  // namespace

PauliElement::PauliElement(std::size_t num_qubits)
    : num_qubits_(num_qubits), phase_(0), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {
  if (num_qubits == 0) {
    throw std::invalid_argument("Pauli element needs at least one qubit");
  }
}

PauliElement PauliElement::single(std::size_t num_qubits, std::size_t qubit, char letter) {
  PauliElement p(num_qubits);
  p.check_qubit(qubit);
  switch (letter) {
    case 'I':
      break;
    case 'X':
      p.set_x(qubit, true);
      break;
    case 'Y':
      p.set_x(qubit, true);
      p.set_z(qubit, true);
      break;
    case 'Z':
      p.set_z(qubit, true);
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
  }
  return p;
}

void PauliElement::check_qubit(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                            std::to_string(num_qubits_) + " qubits");
  }
}

bool PauliElement::x_bit(std::size_t qubit) const {
  check_qubit(qubit);
  return (x_[qubit / kWordBits] >> (qubit % kWordBits)) & 1ull;
}

bool PauliElement::z_bit(std::size_t qubit) const {
  check_qubit(qubit);
  return (z_[qubit / kWordBits] >> (qubit % kWordBits)) & 1ull;
}

void PauliElement::set_x(std::size_t qubit, bool value) {
  check_qubit(qubit);
  const std::uint64_t mask = 1ull << (qubit % kWordBits);
  if (value) {
    x_[qubit / kWordBits] |= mask;
  } else {
    x_[qubit / kWordBits] &= ~mask;
  }
}

void PauliElement::set_z(std::size_t qubit, bool value) {
  check_qubit(qubit);
  const std::uint64_t mask = 1ull << (qubit % kWordBits);
  if (value) {
    z_[qubit / kWordBits] |= mask;
  } else {
    z_[qubit / kWordBits] &= ~mask;
  }
}

bool PauliElement::is_identity() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] != 0 || z_[w] != 0) {
      return false;
    }
  }
  return true;
}

int PauliElement::sign() const {
  if (!is_hermitian()) {
    throw std::logic_error("sign() called on a non-Hermitian Pauli element");
  }
  return phase_ == 0 ? +1 : -1;
}

void PauliElement::left_mul(const PauliElement& other) {
  check_same_width(*this, other);
  phase_ = (phase_ + other.phase_ + product_phase_delta(other, *this)) & 3u;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    x_[w] ^= other.x_[w];
    z_[w] ^= other.z_[w];
  }
}

void PauliElement::right_mul(const PauliElement& other) {
  check_same_width(*this, other);
  phase_ = (phase_ + other.phase_ + product_phase_delta(*this, other)) & 3u;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    x_[w] ^= other.x_[w];
    z_[w] ^= other.z_[w];
  }
}

void PauliElement::conjugate_h(std::size_t qubit) {
  const bool x = x_bit(qubit);
  const bool z = z_bit(qubit);
  if (x && z) {
    negate();  // Y -> -Y
  }
  set_x(qubit, z);
  set_z(qubit, x);
}

void PauliElement::conjugate_s(std::size_t qubit) {
  const bool x = x_bit(qubit);
  if (!x) {
    return;  // I and Z are fixed
  }
  if (z_bit(qubit)) {
    negate();  // Y -> -X
  }
  set_z(qubit, !z_bit(qubit));  // X -> Y, Y -> X
}

void PauliElement::conjugate_cnot(std::size_t control, std::size_t target) {
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  const bool xc = x_bit(control);
  const bool zc = z_bit(control);
  const bool xt = x_bit(target);
  const bool zt = z_bit(target);
  if (xc && zt && xt == zc) {
    negate();
  }
  set_x(target, xt ^ xc);
  set_z(control, zc ^ zt);
}

bool PauliElement::same_bits(const PauliElement& other) const {
  return num_qubits_ == other.num_qubits_ && x_ == other.x_ && z_ == other.z_;
}

PauliElement multiply(const PauliElement& a, const PauliElement& b) {
  PauliElement result = b;
  result.left_mul(a);
  return result;
}

int symplectic_product(const PauliElement& a, const PauliElement& b) {
  check_same_width(a, b);
  const auto& x1 = a.x_words();
  const auto& z1 = a.z_words();
  const auto& x2 = b.x_words();
  const auto& z2 = b.z_words();
  unsigned parity = 0;
  for (std::size_t w = 0; w < x1.size(); ++w) {
    parity ^= static_cast<unsigned>(std::popcount((x1[w] & z2[w]) ^ (z1[w] & x2[w])));
  }
  return static_cast<int>(parity & 1u);
}

PauliElement conjugate_h(PauliElement element, std::size_t qubit) {
  element.conjugate_h(qubit);
  return element;
}

PauliElement conjugate_s(PauliElement element, std::size_t qubit) {
  element.conjugate_s(qubit);
  return element;
}

PauliElement conjugate_cnot(PauliElement element, std::size_t control, std::size_t target) {
  element.conjugate_cnot(control, target);
  return element;
}

PauliElement parse_pauli(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty Pauli string");
  }
  unsigned phase = 0;
  std::size_t start = 0;
  if (text[0] == '+') {
    start = 1;
  } else if (text[0] == '-') {
    phase = 2;
    start = 1;
  }
  if (start == text.size()) {
    throw std::invalid_argument("Pauli string has a sign but no letters");
  }
  PauliElement p(text.size() - start);
  for (std::size_t k = start; k < text.size(); ++k) {
    const char letter = text[k];
    const std::size_t qubit = k - start;
    switch (letter) {
      case 'I':
        break;
      case 'X':
        p.set_x(qubit, true);
        break;
      case 'Y':
        p.set_x(qubit, true);
        p.set_z(qubit, true);
        break;
      case 'Z':
        p.set_z(qubit, true);
        break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli letter '") + letter +
                                    "' at position " + std::to_string(k));
    }
  }
  p.set_phase_exponent(phase);
  return p;
}

std::string format_pauli(const PauliElement& element) {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[element.phase_exponent()];
  out.reserve(out.size() + element.num_qubits());
  for (std::size_t q = 0; q < element.num_qubits(); ++q) {
    const bool x = element.x_bit(q);
    const bool z = element.z_bit(q);
    out.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
  }
  return out;
}

}  // namespace comsim
