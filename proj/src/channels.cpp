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

#include "vqft/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "vqft/gates.hpp"

namespace vqft {

namespace {
// 2019 SI exact values.
constexpr double kPlanck = 6.62607015e-34;     // J s
constexpr double kBoltzmann = 1.380649e-23;    // J / K
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

double KrausChannel::completeness_error() const {
  if (ops.empty()) return 1.0;
  const int dim = ops.front().dim();
  CMatrix sum(dim);
  for (const CMatrix& k : ops) sum += adjoint(k) * k;
  return max_abs_diff(sum, CMatrix::identity(dim));
}

KrausChannel KrausChannel::make_checked(std::vector<CMatrix> ops, int arity) {
  if (arity != 1 && arity != 2) throw std::invalid_argument("KrausChannel: arity must be 1 or 2");
  const int dim = arity == 1 ? 2 : 4;
  if (ops.empty()) throw std::invalid_argument("KrausChannel: no operators");
  for (const CMatrix& k : ops) {
    if (k.dim() != dim) throw std::invalid_argument("KrausChannel: operator dimension mismatch");
  }
  KrausChannel ch{std::move(ops), arity};
  if (ch.completeness_error() > 1e-10) {
    throw std::invalid_argument("KrausChannel: completeness sum deviates from identity");
  }
  return ch;
}

CMatrix partial_trace(const CMatrix& rho4, int traced_qubit) {
  if (rho4.dim() != 4) throw std::invalid_argument("partial_trace: expected 4x4");
  if (traced_qubit != 0 && traced_qubit != 1) {
    throw std::invalid_argument("partial_trace: qubit must be 0 or 1");
  }
  CMatrix out(2);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      cplx s{};
      for (int t = 0; t < 2; ++t) {
        // index = 2*q0 + q1; the traced index t runs over the dropped wire
        const int row = traced_qubit == 0 ? 2 * t + a : 2 * a + t;
        const int col = traced_qubit == 0 ? 2 * t + b : 2 * b + t;
        s += rho4.at(row, col);
      }
      out.at(a, b) = s;
    }
  }
  return out;
}

DensityMatrix depolarize(const DensityMatrix& rho, double epsilon, int wire) {
  if (epsilon < 0.0 || epsilon > 1.0) throw std::invalid_argument("depolarize: epsilon not in [0,1]");
  if (wire != 0 && wire != 1) throw std::invalid_argument("depolarize: wire must be 0 or 1");
  const CMatrix kept = partial_trace(rho.mat, wire);
  CMatrix half = CMatrix::identity(2);
  half *= 0.5;
  const CMatrix replaced = wire == 0 ? kron(half, kept) : kron(kept, half);
  return DensityMatrix{(1.0 - epsilon) * rho.mat + epsilon * replaced};
}

DensityMatrix depolarize(const DensityMatrix& rho, double epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0) throw std::invalid_argument("depolarize: epsilon not in [0,1]");
  CMatrix mixed = CMatrix::identity(4);
  mixed *= 0.25;
  return DensityMatrix{(1.0 - epsilon) * rho.mat + epsilon * mixed};
}

KrausChannel depolarizing_kraus(double epsilon, int n_qubits) {
  if (epsilon < 0.0 || epsilon > 1.0) throw std::invalid_argument("depolarizing_kraus: epsilon not in [0,1]");
  CMatrix paulis1[4] = {CMatrix::identity(2), pauli_x(), CMatrix(2), pauli_z()};
  paulis1[2].at(0, 1) = cplx(0.0, -1.0);  // Y
  paulis1[2].at(1, 0) = cplx(0.0, 1.0);

  std::vector<CMatrix> ops;
  if (n_qubits == 1) {
    // (1-e) rho + e I/2 = (1-3e/4) rho + e/4 (X rho X + Y rho Y + Z rho Z)
    ops.push_back(std::sqrt(1.0 - 0.75 * epsilon) * paulis1[0]);
    for (int k = 1; k < 4; ++k) ops.push_back(std::sqrt(epsilon / 4.0) * paulis1[k]);
    return KrausChannel::make_checked(std::move(ops), 1);
  }
  if (n_qubits == 2) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const double w = (a == 0 && b == 0) ? 1.0 - 15.0 * epsilon / 16.0 : epsilon / 16.0;
        ops.push_back(std::sqrt(w) * kron(paulis1[a], paulis1[b]));
      }
    }
    return KrausChannel::make_checked(std::move(ops), 2);
  }
  throw std::invalid_argument("depolarizing_kraus: n_qubits must be 1 or 2");
}

double excited_population(double freq_hz, double temp_mk) {
  if (freq_hz <= 0.0 || temp_mk <= 0.0) {
    throw std::invalid_argument("excited_population: frequency and temperature must be positive");
  }
  const double ratio = kPlanck * freq_hz / (kBoltzmann * temp_mk * 1e-3);
  return 1.0 / (1.0 + std::exp(ratio));
}

void ThermalParams::validate() const {
  if (!(t1_s > 0.0)) throw std::invalid_argument("ThermalParams: T1 must be positive");
  if (!(t2_s > 0.0) || t2_s > 2.0 * t1_s) {
    throw std::invalid_argument("ThermalParams: T2 must satisfy 0 < T2 <= 2*T1");
  }
  if (gate_time_s < 0.0) throw std::invalid_argument("ThermalParams: gate time must be >= 0");
  if (p_excited < 0.0 || p_excited > 1.0) {
    throw std::invalid_argument("ThermalParams: p_excited not in [0,1]");
  }
}

ThermalProbs thermal_probs(const ThermalParams& p) {
  p.validate();
  ThermalProbs q;
  q.e_t1 = std::exp(-p.gate_time_s / p.t1_s);
  q.e_t2 = std::exp(-p.gate_time_s / p.t2_s);
  q.p_reset = 1.0 - q.e_t1;
  q.p_z = (1.0 - q.p_reset) * (1.0 - q.e_t2 / q.e_t1) / 2.0;
  q.p_r0 = (1.0 - p.p_excited) * q.p_reset;
  q.p_r1 = p.p_excited * q.p_reset;
  q.p_id = 1.0 - q.p_z - q.p_r0 - q.p_r1;
  // p_z < 0 is legitimate for T1 < T2 <= 2*T1 (the map is still CPTP);
  // anything else outside [0,1] signals inconsistent inputs.
  const bool ok = q.p_reset >= 0.0 && q.p_reset <= 1.0 && q.p_r0 >= 0.0 && q.p_r0 <= 1.0 &&
                  q.p_r1 >= 0.0 && q.p_r1 <= 1.0 && q.p_id >= 0.0 && q.p_id <= 1.0 &&
                  q.p_z <= 1.0 && q.p_z >= -0.5;
  if (!ok) throw std::invalid_argument("thermal_probs: probabilities out of range");
  if (std::abs(q.p_id + q.p_z + q.p_r0 + q.p_r1 - 1.0) > 1e-12) {
    throw std::invalid_argument("thermal_probs: probabilities do not sum to 1");
  }
  return q;
}

KrausChannel thermal_kraus(const ThermalProbs& tp) {
  std::vector<CMatrix> ops;
  if (tp.p_z >= 0.0) {
    CMatrix k0 = CMatrix::identity(2);
    k0 *= std::sqrt(tp.p_id);
    CMatrix k1 = pauli_z();
    k1 *= std::sqrt(tp.p_z);
    CMatrix k2(2), k3(2), k4(2), k5(2);
    k2.at(0, 0) = std::sqrt(tp.p_r0);
    k3.at(0, 1) = std::sqrt(tp.p_r0);
    k4.at(1, 0) = std::sqrt(tp.p_r1);
    k5.at(1, 1) = std::sqrt(tp.p_r1);
    ops = {k0, k1, k2, k3, k4, k5};
  } else {
    // T2 > T1: realize the same map as generalized amplitude damping
    // (decay gamma = p_reset toward equilibrium population pe) composed
    // with dephasing chosen so coherences decay by exactly e_t2.
    const double gamma = tp.p_reset;
    const double pe = tp.p_reset > 0.0 ? tp.p_r1 / tp.p_reset : 0.0;
    const double keep = std::sqrt(1.0 - gamma);
    CMatrix a0(2), a1(2), a2(2), a3(2);
    a0.at(0, 0) = 1.0;
    a0.at(1, 1) = keep;
    a0 *= std::sqrt(1.0 - pe);
    a1.at(0, 1) = std::sqrt(gamma);
    a1 *= std::sqrt(1.0 - pe);
    a2.at(0, 0) = keep;
    a2.at(1, 1) = 1.0;
    a2 *= std::sqrt(pe);
    a3.at(1, 0) = std::sqrt(gamma);
    a3 *= std::sqrt(pe);

    const double coh = tp.e_t2 / std::sqrt(tp.e_t1);  // residual dephasing factor
    if (coh > 1.0 + 1e-12) {
      throw std::invalid_argument("thermal_kraus: dephasing factor above 1 (T2 > 2*T1?)");
    }
    const double p_ph = std::max(0.0, (1.0 - std::min(coh, 1.0)) / 2.0);
    CMatrix d0 = CMatrix::identity(2);
    d0 *= std::sqrt(1.0 - p_ph);
    CMatrix d1 = pauli_z();
    d1 *= std::sqrt(p_ph);
    for (const CMatrix& d : {d0, d1}) {
      for (const CMatrix& a : {a0, a1, a2, a3}) {
        const CMatrix k = d * a;
        if (frobenius_norm(k) > 1e-14) ops.push_back(k);
      }
    }
  }
  return KrausChannel::make_checked(std::move(ops), 1);
}

CMatrix crosstalk_unitary(double zeta_hz, double duration_s) {
  if (duration_s < 0.0) throw std::invalid_argument("crosstalk_unitary: duration must be >= 0");
  CMatrix u = CMatrix::identity(4);
  u.at(3, 3) = std::exp(cplx(0.0, -kTwoPi * zeta_hz * duration_s));
  return u;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, int wire) {
  CMatrix out(4);
  if (ch.arity == 1) {
    for (const CMatrix& k : ch.ops) {
      const CMatrix k4 = embed(k, wire);
      out += k4 * rho.mat * adjoint(k4);
    }
  } else {
    for (const CMatrix& k : ch.ops) out += k * rho.mat * adjoint(k);
  }
  if (!out.is_finite() || std::abs(trace(out) - cplx(1.0)) > 1e-8) {
    throw std::runtime_error("apply_channel: output trace deviates from 1 (broken channel)");
  }
  return DensityMatrix{out};
}

}  // namespace vqft
