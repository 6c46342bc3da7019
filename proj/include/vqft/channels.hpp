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

#ifndef VQFT_CHANNELS_HPP
#define VQFT_CHANNELS_HPP

#include <vector>

#include "vqft/matcore.hpp"
#include "vqft/states.hpp"

namespace vqft {

/// Completeness-checked Kraus map. `arity` is the number of qubits the
/// operators act on (1 or 2); single-qubit channels are lifted onto a wire
/// at application time.
struct KrausChannel {
  std::vector<CMatrix> ops;
  int arity = 1;

  /// Validates sum K^dag K = I within 1e-10 and returns the channel.
  static KrausChannel make_checked(std::vector<CMatrix> ops, int arity);
  double completeness_error() const;
};

/// Reduced state of the wire that is kept (big-endian ordering).
CMatrix partial_trace(const CMatrix& rho4, int traced_qubit);

/// Depolarizing map (1 - eps) rho + eps * I/2^n. The single-wire overload
/// replaces that wire's marginal with I/2 while the other wire passes
/// through untouched.
DensityMatrix depolarize(const DensityMatrix& rho, double epsilon, int wire);
DensityMatrix depolarize(const DensityMatrix& rho, double epsilon);

/// Pauli-form Kraus representation of the same depolarizing map; mainly a
/// cross-check route against the affine form above.
KrausChannel depolarizing_kraus(double epsilon, int n_qubits);

/// Thermal equilibrium excited-state population 1/(1 + e^{hf/kT}) for a
/// qubit of frequency `freq_hz` at `temp_mk` millikelvin (2019 SI constants).
double excited_population(double freq_hz, double temp_mk);

struct ThermalParams {
  double t1_s = 0.0;
  double t2_s = 0.0;
  double gate_time_s = 0.0;
  double p_excited = 0.0;

  void validate() const;  // 0 < t1, 0 < t2 <= 2*t1, tg >= 0, pe in [0,1]
};

/// The scalar ingredients of the relaxation channel. p_z is negative when
/// T2 > T1; the channel stays completely positive for any T2 <= 2*T1, only
/// its diagonal Kraus form breaks down (see thermal_kraus).
struct ThermalProbs {
  double e_t1 = 1.0;
  double e_t2 = 1.0;
  double p_reset = 0.0;
  double p_z = 0.0;
  double p_r0 = 0.0;
  double p_r1 = 0.0;
  double p_id = 1.0;
};
ThermalProbs thermal_probs(const ThermalParams& p);

/// Single-qubit thermal relaxation channel. For p_z >= 0 this is the
/// six-operator set {sqrt(p_id) I, sqrt(p_z) Z, reset ops}; for T2 > T1 it
/// falls back to generalized amplitude damping composed with dephasing,
/// which realizes the same map with valid operators.
KrausChannel thermal_kraus(const ThermalProbs& tp);

/// diag(1, 1, 1, e^{-i 2 pi zeta T})
CMatrix crosstalk_unitary(double zeta_hz, double duration_s);

/// sum_k K rho K^dag with single-qubit channels lifted onto `wire`.
/// Output trace is verified to stay within 1e-8 of 1.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, int wire = 0);

}  // namespace vqft

#endif  // VQFT_CHANNELS_HPP
