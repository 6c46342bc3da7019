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

#include "vqft/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vqft {

namespace {
constexpr double kHermTol = 1e-10;
constexpr double kNegEvalTol = 1e-10;
}  // namespace

CMatrix::CMatrix(int dim) : dim_(dim) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("CMatrix: dimension must be 2 or 4");
  }
  a_.fill(cplx{});
}

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMatrix: dimension mismatch");
  const int n = a.dim();
  CMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

bool CMatrix::is_finite() const {
  for (int i = 0; i < dim_ * dim_; ++i) {
    if (!std::isfinite(a_[i].real()) || !std::isfinite(a_[i].imag())) return false;
  }
  return true;
}

CMatrix adjoint(const CMatrix& m) {
  CMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.at(i, j) = std::conj(m.at(j, i));
  return out;
}

cplx trace(const CMatrix& m) {
  cplx t{};
  for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
  return t;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMatrix: dimension mismatch");
  double d = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a.at(i, j) - b.at(i, j)));
  return d;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("kron: both factors must be 2x2");
  }
  CMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out.at(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
  return out;
}

double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += std::norm(m.at(i, j));
  return std::sqrt(s);
}

double hermiticity_error(const CMatrix& m) {
  double d = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j)
      d = std::max(d, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
  return d;
}

HermitianEig hermitian_eig(const CMatrix& m) {
  if (hermiticity_error(m) > kHermTol * std::max(1.0, frobenius_norm(m))) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  }
  const int n = m.dim();
  // Work on the Hermitian average so round-off asymmetry cannot bias sweeps.
  CMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
  CMatrix v = CMatrix::identity(n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += std::norm(a.at(p, q));
    return std::sqrt(s);
  };

  const double scale = std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < 60 && off_norm() > 1e-15 * scale; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        // Phase factor making the pivot real, then a classic real rotation.
        const cplx phase = apq / r;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary rotation J with J[p][p]=c, J[p][q]=s*phase,
        // J[q][p]=-s*conj(phase), J[q][q]=c; apply A <- J^dag A J, V <- V J.
        const cplx jp_p = c;
        const cplx jq_p = -s * std::conj(phase);
        const cplx jp_q = s * phase;
        const cplx jq_q = c;
        for (int k = 0; k < n; ++k) {
          const cplx akp = a.at(k, p);
          const cplx akq = a.at(k, q);
          a.at(k, p) = akp * jp_p + akq * jq_p;
          a.at(k, q) = akp * jp_q + akq * jq_q;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a.at(p, k);
          const cplx aqk = a.at(q, k);
          a.at(p, k) = std::conj(jp_p) * apk + std::conj(jq_p) * aqk;
          a.at(q, k) = std::conj(jp_q) * apk + std::conj(jq_q) * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v.at(k, p);
          const cplx vkq = v.at(k, q);
          v.at(k, p) = vkp * jp_p + vkq * jq_p;
          v.at(k, q) = vkp * jp_q + vkq * jq_q;
        }
        a.at(p, q) = cplx{};
        a.at(q, p) = cplx{};
      }
    }
  }

  // Sort ascending, permuting eigenvector columns alongside.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });
  HermitianEig out{std::vector<double>(n), CMatrix(n)};
  for (int c = 0; c < n; ++c) {
    out.values[c] = a.at(idx[c], idx[c]).real();
    for (int r = 0; r < n; ++r) out.vectors.at(r, c) = v.at(r, idx[c]);
  }
  return out;
}

double trace_norm(const CMatrix& m) {
  // One-sided Jacobi: rotate column pairs until they are orthogonal, then
  // the singular values are the column norms. Unlike rooting the
  // eigenvalues of M^dag M, this keeps tiny singular values accurate to
  // machine precision instead of sqrt(round-off).
  const int n = m.dim();
  CMatrix a = m;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double worst = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cplx g{};
        double app = 0.0, aqq = 0.0;
        for (int k = 0; k < n; ++k) {
          g += std::conj(a.at(k, p)) * a.at(k, q);
          app += std::norm(a.at(k, p));
          aqq += std::norm(a.at(k, q));
        }
        const double r = std::abs(g);
        const double scale = std::sqrt(app * aqq);
        if (r <= 1e-300 || r <= 1e-16 * scale) continue;
        worst = std::max(worst, r / std::max(scale, 1e-300));
        const cplx phase = g / r;
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const cplx akp = a.at(k, p);
          const cplx akq = a.at(k, q);
          a.at(k, p) = c * akp - s * std::conj(phase) * akq;
          a.at(k, q) = s * phase * akp + c * akq;
        }
      }
    }
    if (worst < 4e-16) break;
  }
  double total = 0.0;
  for (int c = 0; c < n; ++c) {
    double col = 0.0;
    for (int k = 0; k < n; ++k) col += std::norm(a.at(k, c));
    total += std::sqrt(col);
  }
  return total;
}

CMatrix hermitian_sqrt(const CMatrix& m) {
  if (hermiticity_error(m) > kHermTol * std::max(1.0, frobenius_norm(m))) {
    throw std::invalid_argument("hermitian_sqrt: matrix is not Hermitian");
  }
  auto eig = hermitian_eig(m);
  double top = 0.0;
  for (double ev : eig.values) top = std::max(top, std::abs(ev));
  for (double& ev : eig.values) {
    if (ev < -kNegEvalTol) {
      throw std::invalid_argument("hermitian_sqrt: eigenvalue below -1e-10, matrix is not PSD");
    }
    // Round-off-sized eigenvalues are exact zeros; rooting them would
    // inject sqrt(eps)-level noise into the result.
    ev = ev <= 1e-14 * std::max(1.0, top) ? 0.0 : std::sqrt(ev);
  }
  const int n = m.dim();
  CMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx s{};
      for (int k = 0; k < n; ++k) {
        s += eig.vectors.at(i, k) * eig.values[k] * std::conj(eig.vectors.at(j, k));
      }
      out.at(i, j) = s;
    }
  }
  return out;
}

}  // namespace vqft
