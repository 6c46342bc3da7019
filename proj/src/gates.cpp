// Copyright 2026 The vqft Authors
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

#include "vqft/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace vqft {

namespace {
const cplx kI{0.0, 1.0};
}

CMatrix pauli_x() {
  CMatrix m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

CMatrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix m(2);
  m.at(0, 0) = r;
  m.at(0, 1) = r;
  m.at(1, 0) = r;
  m.at(1, 1) = -r;
  return m;
}

CMatrix rz(double lambda) {
  CMatrix m(2);
  m.at(0, 0) = std::exp(-kI * (lambda / 2.0));
  m.at(1, 1) = std::exp(kI * (lambda / 2.0));
  return m;
}

CMatrix ry(double lambda) {
  const double c = std::cos(lambda / 2.0);
  const double s = std::sin(lambda / 2.0);
  CMatrix m(2);
  m.at(0, 0) = c;
  m.at(0, 1) = -s;
  m.at(1, 0) = s;
  m.at(1, 1) = c;
  return m;
}

CMatrix cnot(int control) {
  if (control != 0 && control != 1) throw std::invalid_argument("cnot: control must be 0 or 1");
  CMatrix m(4);
  if (control == 0) {
    // flips qubit 1 when qubit 0 is set: |10> <-> |11|
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    m.at(2, 3) = 1.0;
    m.at(3, 2) = 1.0;
  } else {
    // flips qubit 0 when qubit 1 is set: |01> <-> |11|
    m.at(0, 0) = 1.0;
    m.at(1, 3) = 1.0;
    m.at(2, 2) = 1.0;
    m.at(3, 1) = 1.0;
  }
  return m;
}

CMatrix swap_gate() {
  CMatrix m(4);
  m.at(0, 0) = 1.0;
  m.at(1, 2) = 1.0;
  m.at(2, 1) = 1.0;
  m.at(3, 3) = 1.0;
  return m;
}

CMatrix cphase(double phi) {
  CMatrix m = CMatrix::identity(4);
  m.at(3, 3) = std::exp(kI * phi);
  return m;
}

CMatrix u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  CMatrix m(2);
  m.at(0, 0) = c;
  m.at(0, 1) = -std::exp(kI * lambda) * s;
  m.at(1, 0) = std::exp(kI * phi) * s;
  m.at(1, 1) = std::exp(kI * (phi + lambda)) * c;
  return m;
}

CMatrix general_u(double alpha, double beta, double delta, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  CMatrix m(2);
  m.at(0, 0) = std::exp(kI * (delta - alpha / 2.0 - beta / 2.0)) * c;
  m.at(0, 1) = -std::exp(kI * (delta - alpha / 2.0 + beta / 2.0)) * s;
  m.at(1, 0) = std::exp(kI * (delta + alpha / 2.0 - beta / 2.0)) * s;
  m.at(1, 1) = std::exp(kI * (delta + alpha / 2.0 + beta / 2.0)) * c;
  return m;
}

AbcFactors abc_factors(double alpha, double beta, double theta) {
  return AbcFactors{rz(alpha) * ry(theta / 2.0),
                    ry(-theta / 2.0) * rz(-(alpha + beta) / 2.0),
                    rz((beta - alpha) / 2.0)};
}

CMatrix embed(const CMatrix& gate, int qubit) {
  if (gate.dim() != 2) throw std::invalid_argument("embed: expected a single-qubit gate");
  if (qubit != 0 && qubit != 1) throw std::invalid_argument("embed: qubit must be 0 or 1");
  return qubit == 0 ? kron(gate, CMatrix::identity(2)) : kron(CMatrix::identity(2), gate);
}

}  // namespace vqft
