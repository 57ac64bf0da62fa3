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

#include "comsim/oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <functional>

#include "comsim/rng.hpp"
#include "comsim/tableau.hpp"

namespace comsim {

namespace {

using Complex = std::complex<double>;

constexpr double kNormTolerance = 1e-12;
constexpr double kDyadicTolerance = 1e-9;

const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^s

void check_cap(std::size_t num_qubits, std::size_t cap) {
  if (num_qubits > cap) {
    throw CapExceeded("oracle limited to " + std::to_string(cap) + " qubits, got " +
                      std::to_string(num_qubits));
  }
}

// Index bit of `qubit` in the amplitude array; qubit 0 is the most
// significant bit so that tensor order matches the text form.
std::uint64_t qubit_mask(std::size_t num_qubits, std::size_t qubit) {
  return 1ull << (num_qubits - 1 - qubit);
}

// All Clifford-circuit measurement probabilities are 0, 1/2 or 1; snap to
// those exactly so branch bookkeeping stays dyadic.
double snap_dyadic(double p) {
  for (const double v : {0.0, 0.5, 1.0}) {
    if (std::abs(p - v) <= kDyadicTolerance) {
      return v;
    }
  }
  throw std::logic_error("measurement probability " + std::to_string(p) +
                         " is not 0, 1/2 or 1 on a stabilizer input");
}

}  // namespace

Eigen::MatrixXcd pauli_matrix(const PauliElement& element, std::size_t cap) {
  check_cap(element.num_qubits(), cap);
  static const Eigen::Matrix2cd kI = Eigen::Matrix2cd::Identity();
  static const Eigen::Matrix2cd kX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd kY =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Eigen::Matrix2cd kZ = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();

  // Accumulate kron(letter_q, result) with q descending, so qubit 0 ends up
  // as the most significant (leftmost) tensor factor.
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = element.num_qubits(); q-- > 0;) {
    const bool x = element.x_bit(q);
    const bool z = element.z_bit(q);
    const Eigen::Matrix2cd& letter = x ? (z ? kY : kX) : (z ? kZ : kI);
    Eigen::MatrixXcd next(result.rows() * 2, result.cols() * 2);
    next.block(0, 0, result.rows(), result.cols()) = letter(0, 0) * result;
    next.block(0, result.cols(), result.rows(), result.cols()) = letter(0, 1) * result;
    next.block(result.rows(), 0, result.rows(), result.cols()) = letter(1, 0) * result;
    next.block(result.rows(), result.cols(), result.rows(), result.cols()) = letter(1, 1) * result;
    result = std::move(next);
  }
  return kPhases[element.phase_exponent()] * result;
}

StateVector::StateVector(std::size_t num_qubits, std::size_t cap) {
  if (num_qubits == 0) {
    throw std::invalid_argument("state vector needs at least one qubit");
  }
  check_cap(num_qubits, cap);
  num_qubits_ = num_qubits;
  amplitudes_ = Eigen::VectorXcd::Zero(1LL << num_qubits);
  amplitudes_(0) = 1.0;
}

StateVector StateVector::from_amplitudes(Eigen::VectorXcd amplitudes, std::size_t cap) {
  const auto dim = static_cast<std::uint64_t>(amplitudes.size());
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("amplitude vector length must be a power of two, >= 2");
  }
  const std::size_t n = static_cast<std::size_t>(std::countr_zero(dim));
  check_cap(n, cap);
  if (std::abs(amplitudes.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("amplitude vector is not normalized");
  }
  StateVector psi;
  psi.num_qubits_ = n;
  psi.amplitudes_ = std::move(amplitudes);
  return psi;
}

void StateVector::apply_h(std::size_t qubit) {
  const std::uint64_t mask = qubit_mask(num_qubits_, qubit);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amplitudes_.size()); ++i) {
    if (i & mask) continue;
    const Complex a = amplitudes_(i);
    const Complex b = amplitudes_(i | mask);
    amplitudes_(i) = (a + b) * inv_sqrt2;
    amplitudes_(i | mask) = (a - b) * inv_sqrt2;
  }
}

void StateVector::apply_s(std::size_t qubit) {
  const std::uint64_t mask = qubit_mask(num_qubits_, qubit);
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amplitudes_.size()); ++i) {
    if (i & mask) amplitudes_(i) *= Complex(0, 1);
  }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  const std::uint64_t cmask = qubit_mask(num_qubits_, control);
  const std::uint64_t tmask = qubit_mask(num_qubits_, target);
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amplitudes_.size()); ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(amplitudes_(i), amplitudes_(i | tmask));
    }
  }
}

void StateVector::apply(const Instruction& instruction) {
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
      throw std::invalid_argument("measure instructions are not unitary gates");
  }
  throw std::logic_error("unreachable instruction kind");
}

Eigen::VectorXcd StateVector::applied_pauli(const PauliElement& observable) const {
  if (observable.num_qubits() != num_qubits_) {
    throw std::invalid_argument("observable width does not match state");
  }
  std::uint64_t xmask = 0;
  std::uint64_t zmask = 0;
  unsigned phase = observable.phase_exponent();
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    const bool x = observable.x_bit(q);
    const bool z = observable.z_bit(q);
    if (x) xmask |= qubit_mask(num_qubits_, q);
    if (z) zmask |= qubit_mask(num_qubits_, q);
    if (x && z) phase = (phase + 1) & 3u;  // the i in Y = i X Z
  }
  const Complex global = kPhases[phase];
  Eigen::VectorXcd out(amplitudes_.size());
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amplitudes_.size()); ++i) {
    const double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
    out(i ^ xmask) = amplitudes_(i) * global * sign;
  }
  return out;
}

double StateVector::expectation(const PauliElement& observable) const {
  return amplitudes_.dot(applied_pauli(observable)).real();
}

PauliCollapse StateVector::measure_pauli(const PauliElement& observable) const {
  validate_observable(observable, num_qubits_);
  const Eigen::VectorXcd m_psi = applied_pauli(observable);
  const double expect = amplitudes_.dot(m_psi).real();
  double p_plus = 0.5 * (1.0 + expect);
  if (p_plus < -kNormTolerance || p_plus > 1.0 + kNormTolerance) {
    throw std::logic_error("projective probability out of [0, 1]");
  }
  p_plus = std::min(1.0, std::max(0.0, p_plus));

  PauliCollapse result;
  result.p_plus = p_plus;
  if (p_plus > kNormTolerance) {
    Eigen::VectorXcd plus = (amplitudes_ + m_psi) / (2.0 * std::sqrt(p_plus));
    result.plus = from_amplitudes(std::move(plus), num_qubits_);
  }
  if (1.0 - p_plus > kNormTolerance) {
    Eigen::VectorXcd minus = (amplitudes_ - m_psi) / (2.0 * std::sqrt(1.0 - p_plus));
    result.minus = from_amplitudes(std::move(minus), num_qubits_);
  }
  return result;
}

std::map<std::string, double> run_circuit_distribution(const Circuit& circuit, std::size_t cap) {
  check_cap(circuit.num_qubits, cap);
  std::map<std::string, double> distribution;

  std::function<void(StateVector, double, std::string, std::size_t)> walk =
      [&](StateVector psi, double probability, std::string key, std::size_t ip) {
        for (; ip < circuit.instructions.size(); ++ip) {
          const Instruction& ins = circuit.instructions[ip];
          if (ins.kind != Instruction::Kind::Measure) {
            psi.apply(ins);
            continue;
          }
          const auto collapse = psi.measure_pauli(*ins.observable);
          const double p = snap_dyadic(collapse.p_plus);
          if (p > 0.0) {
            walk(*collapse.plus, probability * p, key + "+", ip + 1);
          }
          if (p < 1.0) {
            walk(*collapse.minus, probability * (1.0 - p), key + "-", ip + 1);
          }
          return;
        }
        distribution[key] += probability;
      };

  walk(StateVector(circuit.num_qubits, cap), 1.0, "", 0);
  return distribution;
}

std::vector<double> replay_probabilities(const Circuit& circuit, const std::vector<int>& outcomes,
                                         std::size_t cap) {
  check_cap(circuit.num_qubits, cap);
  if (outcomes.size() != circuit.num_measurements()) {
    throw std::invalid_argument("outcome record length does not match the circuit");
  }
  std::vector<double> probabilities;
  StateVector psi(circuit.num_qubits, cap);
  std::size_t m = 0;
  for (const Instruction& ins : circuit.instructions) {
    if (ins.kind != Instruction::Kind::Measure) {
      psi.apply(ins);
      continue;
    }
    const auto collapse = psi.measure_pauli(*ins.observable);
    const double p_plus = snap_dyadic(collapse.p_plus);
    const int recorded = outcomes[m++];
    const double p = recorded > 0 ? p_plus : 1.0 - p_plus;
    probabilities.push_back(p);
    if (p == 0.0) {
      break;  // impossible branch; nothing left to condition on
    }
    psi = recorded > 0 ? *collapse.plus : *collapse.minus;
  }
  return probabilities;
}

ShotRecord oracle_sample_shot(const Circuit& circuit, std::uint64_t seed, std::size_t cap) {
  check_cap(circuit.num_qubits, cap);
  Rng rng(seed);
  ShotRecord record{seed, {}};
  StateVector psi(circuit.num_qubits, cap);
  for (const Instruction& ins : circuit.instructions) {
    if (ins.kind != Instruction::Kind::Measure) {
      psi.apply(ins);
      continue;
    }
    const auto collapse = psi.measure_pauli(*ins.observable);
    const double p_plus = snap_dyadic(collapse.p_plus);
    int outcome;
    if (p_plus == 1.0) {
      outcome = +1;
    } else if (p_plus == 0.0) {
      outcome = -1;
    } else {
      outcome = rng.coin();
    }
    record.outcomes.emplace_back(ins.label, outcome);
    psi = outcome > 0 ? *collapse.plus : *collapse.minus;
  }
  return record;
}

}  // namespace comsim
