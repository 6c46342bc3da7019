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

#ifndef VQFT_MATCORE_HPP
#define VQFT_MATCORE_HPP

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace vqft {

using cplx = std::complex<double>;

/// Dense complex matrix of dimension 2 or 4 (the only sizes a 2-qubit
/// simulator ever needs). Row-major, fixed storage, value semantics.
class CMatrix {
 public:
  CMatrix() : dim_(2) { a_.fill(cplx{}); }
  explicit CMatrix(int dim);

  static CMatrix identity(int dim);
  static CMatrix zero(int dim) { return CMatrix(dim); }

  int dim() const { return dim_; }

  cplx& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const cplx& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cplx s, CMatrix m) { return m *= s; }
  friend CMatrix operator*(CMatrix m, cplx s) { return m *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  bool is_finite() const;

 private:
  int dim_;
  std::array<cplx, 16> a_;
};

CMatrix adjoint(const CMatrix& m);
cplx trace(const CMatrix& m);

/// Largest entrywise |a-b|; handy for tests and tolerance checks.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Kronecker product of two 2x2 matrices under the big-endian wire
/// convention (left factor is qubit 0, the most significant bit).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// sqrt(tr(M^dag M))
double frobenius_norm(const CMatrix& m);

/// Sum of singular values, tr(sqrt(M^dag M)).
double trace_norm(const CMatrix& m);

double hermiticity_error(const CMatrix& m);

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.
/// Returns eigenvalues (ascending) and the unitary of column eigenvectors.
struct HermitianEig {
  std::vector<double> values;
  CMatrix vectors;
};
HermitianEig hermitian_eig(const CMatrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything below -1e-10 (or a
/// non-Hermitian input) throws: the state it came from is corrupted.
CMatrix hermitian_sqrt(const CMatrix& m);

}  // namespace vqft

#endif  // VQFT_MATCORE_HPP
