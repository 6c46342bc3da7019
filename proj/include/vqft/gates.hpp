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

#ifndef VQFT_GATES_HPP
#define VQFT_GATES_HPP

#include "vqft/matcore.hpp"

namespace vqft {

// Fixed gates. CNOT takes the control wire as argument; cnot() defaults to
// control = qubit 0 (the most significant bit under the big-endian layout).
CMatrix pauli_x();
CMatrix pauli_z();
CMatrix hadamard();
CMatrix rz(double lambda);  // diag(e^{-i*l/2}, e^{+i*l/2})
CMatrix ry(double lambda);
CMatrix cnot(int control = 0);
CMatrix swap_gate();

/// diag(1, 1, 1, e^{i*phi})
CMatrix cphase(double phi);

/// U3(theta, phi, lambda) =
///   [[cos(t/2),            -e^{i*lambda} sin(t/2)       ],
///    [e^{i*phi} sin(t/2),   e^{i*(phi+lambda)} cos(t/2)]]
CMatrix u3(double theta, double phi, double lambda);

/// General single-qubit unitary e^{i*delta} Rz(alpha) Ry(theta) Rz(beta),
/// written out entrywise.
CMatrix general_u(double alpha, double beta, double delta, double theta);

/// Controlled-gate decomposition factors:
///   A = Rz(alpha) Ry(theta/2)
///   B = Ry(-theta/2) Rz(-(alpha+beta)/2)
///   C = Rz((beta-alpha)/2)
/// with A*B*C = I and A X B X C = Rz(alpha) Ry(theta) Rz(beta).
struct AbcFactors {
  CMatrix a, b, c;
};
AbcFactors abc_factors(double alpha, double beta, double theta);

/// Lift a single-qubit gate onto the given wire of the 2-qubit space.
CMatrix embed(const CMatrix& gate, int qubit);

}  // namespace vqft

#endif  // VQFT_GATES_HPP
