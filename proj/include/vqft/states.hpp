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

#ifndef VQFT_STATES_HPP
#define VQFT_STATES_HPP

#include <array>

#include "vqft/matcore.hpp"
#include "vqft/rng.hpp"

namespace vqft {

// Wire convention throughout: big-endian. Qubit 0 is the top wire and the
// most significant bit of the basis index, so |q0 q1> has index 2*q0 + q1.

/// Normalized 4-component state vector.
struct PureState {
  std::array<cplx, 4> amp{};

  double norm() const;
  /// Throws if the norm deviates from 1 by more than 1e-10.
  void check_normalized() const;
};

cplx inner(const PureState& a, const PureState& b);
PureState apply(const CMatrix& u, const PureState& psi);

/// 4x4 Hermitian, PSD, trace-1 operator.
struct DensityMatrix {
  CMatrix mat{4};

  double trace_error() const;
  double hermiticity() const;
  double min_eigenvalue() const;
  /// Full invariant check (Hermitian 1e-10, trace 1e-10, eigenvalues >= -1e-10).
  void validate() const;
};

DensityMatrix conjugate(const CMatrix& u, const DensityMatrix& rho);  // U rho U^dag

PureState computational_basis(int i);
DensityMatrix to_density(const PureState& psi);

/// The five mutually unbiased bases of the 2-qubit space, stored verbatim:
/// the computational basis plus four bases of entries +-1, +-i over 2.
struct MubSet {
  std::array<std::array<PureState, 4>, 5> bases;
};
const MubSet& mub_states();

/// Random product superposition (U3 (x) U3)|00> with all six angles drawn
/// i.i.d. uniform from [0, 2*pi). Stream is keyed by (seed, state index).
PureState random_superposition(SplitStream& rs);

}  // namespace vqft

#endif  // VQFT_STATES_HPP
