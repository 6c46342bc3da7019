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

#include "vqft/states.hpp"

#include <cmath>
#include <stdexcept>

#include "vqft/gates.hpp"

namespace vqft {

double PureState::norm() const {
  double s = 0.0;
  for (const cplx& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

void PureState::check_normalized() const {
  if (std::abs(norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("PureState: not normalized");
  }
}

cplx inner(const PureState& a, const PureState& b) {
  cplx s{};
  for (int i = 0; i < 4; ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

PureState apply(const CMatrix& u, const PureState& psi) {
  if (u.dim() != 4) throw std::invalid_argument("apply: expected a 4x4 matrix");
  PureState out;
  for (int i = 0; i < 4; ++i) {
    cplx s{};
    for (int j = 0; j < 4; ++j) s += u.at(i, j) * psi.amp[j];
    out.amp[i] = s;
  }
  return out;
}

double DensityMatrix::trace_error() const { return std::abs(trace(mat) - cplx(1.0)); }

double DensityMatrix::hermiticity() const { return hermiticity_error(mat); }

double DensityMatrix::min_eigenvalue() const {
  CMatrix h(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h.at(i, j) = 0.5 * (mat.at(i, j) + std::conj(mat.at(j, i)));
  return hermitian_eig(h).values.front();
}

void DensityMatrix::validate() const {
  if (!mat.is_finite()) throw std::runtime_error("DensityMatrix: non-finite entries");
  if (hermiticity() > 1e-10) throw std::runtime_error("DensityMatrix: not Hermitian");
  if (trace_error() > 1e-10) throw std::runtime_error("DensityMatrix: trace differs from 1");
  if (min_eigenvalue() < -1e-10) throw std::runtime_error("DensityMatrix: negative eigenvalue");
}

DensityMatrix conjugate(const CMatrix& u, const DensityMatrix& rho) {
  return DensityMatrix{u * rho.mat * adjoint(u)};
}

PureState computational_basis(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("computational_basis: index must be in 0..3");
  PureState psi;
  psi.amp[i] = 1.0;
  return psi;
}

DensityMatrix to_density(const PureState& psi) {
  psi.check_normalized();
  DensityMatrix rho;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho.mat.at(i, j) = psi.amp[i] * std::conj(psi.amp[j]);
  return rho;
}

namespace {

MubSet build_mubs() {
  const cplx i{0.0, 1.0};
  const cplx o{1.0, 0.0};
  auto v = [](cplx a, cplx b, cplx c, cplx d, double scale) {
    PureState s;
    s.amp = {a * scale, b * scale, c * scale, d * scale};
    return s;
  };
  MubSet m;
  m.bases[0] = {v(1, 0, 0, 0, 1.0), v(0, 1, 0, 0, 1.0), v(0, 0, 1, 0, 1.0), v(0, 0, 0, 1, 1.0)};
  m.bases[1] = {v(o, o, o, o, 0.5), v(o, o, -o, -o, 0.5), v(o, -o, -o, o, 0.5),
                v(o, -o, o, -o, 0.5)};
  m.bases[2] = {v(o, -o, -i, -i, 0.5), v(o, -o, i, i, 0.5), v(o, o, i, -i, 0.5),
                v(o, o, -i, i, 0.5)};
  m.bases[3] = {v(o, -i, -i, -o, 0.5), v(o, -i, i, o, 0.5), v(o, i, i, -o, 0.5),
                v(o, i, -i, o, 0.5)};
  m.bases[4] = {v(o, -i, -o, -i, 0.5), v(o, -i, o, i, 0.5), v(o, i, -o, i, 0.5),
                v(o, i, o, -i, 0.5)};
  return m;
}

}  // namespace

const MubSet& mub_states() {
  static const MubSet set = build_mubs();
  return set;
}

PureState random_superposition(SplitStream& rs) {
  // Draw order is part of the reproducibility contract:
  // (theta, phi, lambda) for qubit 0, then for qubit 1.
  const double t0 = rs.next_angle();
  const double p0 = rs.next_angle();
  const double l0 = rs.next_angle();
  const double t1 = rs.next_angle();
  const double p1 = rs.next_angle();
  const double l1 = rs.next_angle();
  const CMatrix prep = kron(u3(t0, p0, l0), u3(t1, p1, l1));
  return apply(prep, computational_basis(0));
}

}  // namespace vqft
