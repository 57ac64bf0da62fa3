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

#include "doctest.h"

#include <stdexcept>

#include "comsim/oracle.hpp"
#include "comsim/pauli.hpp"
#include "support.hpp"

using namespace comsim;
using test::random_pauli;

namespace {

// Every element with the given width, all four phase exponents.
std::vector<PauliElement> all_elements(std::size_t n) {
  std::vector<PauliElement> elements;
  const std::size_t combos = 1ull << (2 * n);
  for (std::size_t bits = 0; bits < combos; ++bits) {
    for (unsigned phase = 0; phase < 4; ++phase) {
      PauliElement p(n);
      for (std::size_t q = 0; q < n; ++q) {
        p.set_x(q, (bits >> (2 * q)) & 1);
        p.set_z(q, (bits >> (2 * q + 1)) & 1);
      }
      p.set_phase_exponent(phase);
      elements.push_back(p);
    }
  }
  return elements;
}

bool matrices_close(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff() < 1e-12;
}

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("letter encoding and frozen product examples") {
  const PauliElement z = parse_pauli("Z");
  const PauliElement zz_product = multiply(z, z);
  CHECK(zz_product.is_identity());
  CHECK(zz_product.phase_exponent() == 0);

  // X * Z = -i Y under the letter convention.
  const PauliElement xz = multiply(parse_pauli("X"), parse_pauli("Z"));
  CHECK(xz.x_bit(0));
  CHECK(xz.z_bit(0));
  CHECK(xz.phase_exponent() == 3);
  CHECK(matrices_close(pauli_matrix(xz),
                       pauli_matrix(parse_pauli("X")) * pauli_matrix(parse_pauli("Z"))));

  // XX * ZZ = -YY.
  const PauliElement xxzz = multiply(parse_pauli("XX"), parse_pauli("ZZ"));
  CHECK(format_pauli(xxzz) == "-YY");
  CHECK(xxzz.phase_exponent() == 2);
  CHECK(matrices_close(pauli_matrix(xxzz),
                       pauli_matrix(parse_pauli("XX")) * pauli_matrix(parse_pauli("ZZ"))));
}

TEST_CASE("single-qubit phase table matches single-element products") {
  for (unsigned bits = 0; bits < 16; ++bits) {
    const bool x1 = bits & 1, z1 = bits & 2, x2 = bits & 4, z2 = bits & 8;
    PauliElement a(1), b(1);
    a.set_x(0, x1);
    a.set_z(0, z1);
    b.set_x(0, x2);
    b.set_z(0, z2);
    const PauliElement product = multiply(a, b);
    CHECK(product.phase_exponent() == pauli_mul_phase_exponent(x1, z1, x2, z2));
  }
}

TEST_CASE("products agree with dense matrices exhaustively for n <= 2") {
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    const auto elements = all_elements(n);
    for (const auto& a : elements) {
      for (const auto& b : elements) {
        const Eigen::MatrixXcd expected = pauli_matrix(a) * pauli_matrix(b);
        REQUIRE(matrices_close(pauli_matrix(multiply(a, b)), expected));
      }
    }
  }
}

TEST_CASE("products agree with dense matrices on random 3-qubit pairs") {
  Rng rng(0x9a11);
  for (int trial = 0; trial < 1000; ++trial) {
    const PauliElement a = random_pauli(3, rng, false, true);
    const PauliElement b = random_pauli(3, rng, false, true);
    REQUIRE(matrices_close(pauli_matrix(multiply(a, b)), pauli_matrix(a) * pauli_matrix(b)));
  }
}

TEST_CASE("multiplication is associative and Hermitian elements square to identity") {
  Rng rng(0x51aa);
  for (int trial = 0; trial < 500; ++trial) {
    const PauliElement a = random_pauli(3, rng, false, true);
    const PauliElement b = random_pauli(3, rng, false, true);
    const PauliElement c = random_pauli(3, rng, false, true);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));

    const PauliElement h = random_pauli(4, rng);
    const PauliElement squared = multiply(h, h);
    CHECK(squared.is_identity());
    CHECK(squared.phase_exponent() == 0);
  }
}

TEST_CASE("symplectic product decides commutation") {
  CHECK(symplectic_product(parse_pauli("X"), parse_pauli("Z")) == 1);
  CHECK(symplectic_product(parse_pauli("XX"), parse_pauli("ZZ")) == 0);
  CHECK(symplectic_product(parse_pauli("IZ"), parse_pauli("XX")) == 1);

  // Symmetry, and agreement with matrix commutation, on random pairs.
  Rng rng(0x5eed);
  for (int trial = 0; trial < 300; ++trial) {
    const PauliElement a = random_pauli(3, rng);
    const PauliElement b = random_pauli(3, rng);
    CHECK(symplectic_product(a, b) == symplectic_product(b, a));
    const Eigen::MatrixXcd ab = pauli_matrix(a) * pauli_matrix(b);
    const Eigen::MatrixXcd ba = pauli_matrix(b) * pauli_matrix(a);
    if (symplectic_product(a, b) == 0) {
      CHECK(matrices_close(ab, ba));
    } else {
      CHECK(matrices_close(ab, -ba));
    }
  }
}

TEST_CASE("products of commuting Hermitian elements are Hermitian") {
  Rng rng(0xc0ffee);
  for (int trial = 0; trial < 500; ++trial) {
    const PauliElement a = random_pauli(4, rng);
    const PauliElement b = random_pauli(4, rng);
    CHECK(multiply(a, b).is_hermitian() == (symplectic_product(a, b) == 0));
  }
}

TEST_CASE("hadamard and phase-gate conjugation on frozen letters") {
  CHECK(format_pauli(conjugate_h(parse_pauli("X"), 0)) == "+Z");
  CHECK(format_pauli(conjugate_h(parse_pauli("Z"), 0)) == "+X");
  CHECK(format_pauli(conjugate_h(parse_pauli("Y"), 0)) == "-Y");
  CHECK(format_pauli(conjugate_s(parse_pauli("X"), 0)) == "+Y");
  CHECK(format_pauli(conjugate_s(parse_pauli("Y"), 0)) == "-X");
  CHECK(format_pauli(conjugate_s(parse_pauli("Z"), 0)) == "+Z");
  // X on the control grows an X on the target; Z on the target grows a Z on
  // the control.
  CHECK(format_pauli(conjugate_cnot(parse_pauli("XI"), 0, 1)) == "+XX");
  CHECK(format_pauli(conjugate_cnot(parse_pauli("IZ"), 0, 1)) == "+ZZ");
}

TEST_CASE("conjugations agree with dense unitary conjugation") {
  const Eigen::Matrix2cd h_gate = (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() / std::sqrt(2.0);
  const Eigen::Matrix2cd s_gate =
      (Eigen::Matrix2cd() << 1, 0, 0, std::complex<double>(0, 1)).finished();

  for (const auto& p : all_elements(1)) {
    CHECK(matrices_close(pauli_matrix(conjugate_h(p, 0)),
                         h_gate * pauli_matrix(p) * h_gate.adjoint()));
    CHECK(matrices_close(pauli_matrix(conjugate_s(p, 0)),
                         s_gate * pauli_matrix(p) * s_gate.adjoint()));
  }

  Eigen::Matrix4cd cnot01 = Eigen::Matrix4cd::Zero();  // control = qubit 0 (msb)
  cnot01(0, 0) = cnot01(1, 1) = cnot01(2, 3) = cnot01(3, 2) = 1;
  Eigen::Matrix4cd cnot10 = Eigen::Matrix4cd::Zero();  // control = qubit 1
  cnot10(0, 0) = cnot10(3, 1) = cnot10(2, 2) = cnot10(1, 3) = 1;
  Eigen::Matrix4cd h_on_1 = Eigen::Matrix4cd::Zero();
  h_on_1.block<2, 2>(0, 0) = h_gate;
  h_on_1.block<2, 2>(2, 2) = h_gate;
  Eigen::Matrix4cd s_on_1 = Eigen::Matrix4cd::Zero();
  s_on_1.block<2, 2>(0, 0) = s_gate;
  s_on_1.block<2, 2>(2, 2) = s_gate;

  for (const auto& p : all_elements(2)) {
    CHECK(matrices_close(pauli_matrix(conjugate_cnot(p, 0, 1)),
                         cnot01 * pauli_matrix(p) * cnot01.adjoint()));
    CHECK(matrices_close(pauli_matrix(conjugate_cnot(p, 1, 0)),
                         cnot10 * pauli_matrix(p) * cnot10.adjoint()));
    CHECK(matrices_close(pauli_matrix(conjugate_h(p, 1)),
                         h_on_1 * pauli_matrix(p) * h_on_1.adjoint()));
    CHECK(matrices_close(pauli_matrix(conjugate_s(p, 1)),
                         s_on_1 * pauli_matrix(p) * s_on_1.adjoint()));
  }
}

TEST_CASE("conjugation rejects bad indices") {
  CHECK_THROWS_AS(conjugate_h(parse_pauli("XX"), 2), std::out_of_range);
  CHECK_THROWS_AS(conjugate_cnot(parse_pauli("XX"), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_cnot(parse_pauli("XX"), 0, 5), std::out_of_range);
}

TEST_CASE("mixed-width operands are rejected") {
  CHECK_THROWS_AS(multiply(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_product(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
}

TEST_CASE("text round trips") {
  const PauliElement minus_xx = parse_pauli("-XX");
  CHECK(minus_xx.x_bit(0));
  CHECK(minus_xx.x_bit(1));
  CHECK_FALSE(minus_xx.z_bit(0));
  CHECK(minus_xx.phase_exponent() == 2);

  const PauliElement y = parse_pauli("+Y");
  CHECK(y.x_bit(0));
  CHECK(y.z_bit(0));
  CHECK(y.phase_exponent() == 0);

  CHECK(format_pauli(parse_pauli("ZZ")) == "+ZZ");

  Rng rng(0xf00d);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliElement p = random_pauli(5, rng, true, true);
    CHECK(parse_pauli(format_pauli(p)) == p);
  }
}

TEST_CASE("malformed text is rejected") {
  CHECK_THROWS_AS(parse_pauli(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("XA"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("1Z"), std::invalid_argument);
}

TEST_CASE("hermiticity tracks the phase exponent") {
  PauliElement p = parse_pauli("XZ");
  CHECK(p.is_hermitian());
  CHECK(p.sign() == +1);
  p.negate();
  CHECK(p.sign() == -1);
  p.set_phase_exponent(1);
  CHECK_FALSE(p.is_hermitian());
  CHECK_THROWS_AS(p.sign(), std::logic_error);
}

TEST_SUITE_END();
