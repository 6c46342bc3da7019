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

#ifndef VQFT_CIRCUITS_HPP
#define VQFT_CIRCUITS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vqft/channels.hpp"
#include "vqft/matcore.hpp"
#include "vqft/states.hpp"

namespace vqft {

/// The 12 trainable angles: four U3 triples (theta, phi, lambda) in circuit
/// order. Triples 0..2 sit on qubit 1 around the CNOTs, triple 3 on qubit 0.
struct AnsatzParams {
  std::array<double, 12> angles{};

  static AnsatzParams from_vector(const std::vector<double>& v);
  void check_finite() const;
};

struct GateEvent {
  CMatrix unitary;       // native dimension (2x2 or 4x4)
  CMatrix lifted;        // embedded on the full 2-qubit space
  std::array<int, 2> wires{0, 0};
  int n_wires = 1;
};

GateEvent single_qubit_event(const CMatrix& u, int wire);
GateEvent two_qubit_event(const CMatrix& u);

/// H(q0), CPhase(pi/2), H(q1), SWAP  -- multiplies out to the 4-point DFT.
std::vector<GateEvent> ideal_qft_circuit();
const CMatrix& ideal_qft_unitary();

/// The variational circuit:
///   U3(q1), CNOT(q1->q0), U3(q1), CNOT(q1->q0), U3(q1), U3(q0), SWAP
/// i.e. the controlled-gate decomposition shape closing with the same SWAP
/// as the QFT. With all angles zero it reduces to a bare SWAP.
std::vector<GateEvent> ansatz_circuit(const AnsatzParams& p);

/// Ordered product of the event unitaries.
CMatrix circuit_unitary(const std::vector<GateEvent>& events);

PureState run_noiseless(const std::vector<GateEvent>& events, const PureState& psi);

enum class ScenarioKind {
  noiseless,
  depolarizing,
  depolarizing_thermal,
  depolarizing_crosstalk,
  depolarizing_crosstalk_thermal,
};

std::string to_string(ScenarioKind k);
ScenarioKind scenario_kind_from_string(const std::string& name);

struct CrosstalkSpec {
  double zeta_hz = 0.0;
  double duration_s = 0.0;
};

/// Per-wire relaxation constants; gate times live on the scenario since the
/// same wire relaxes for 60 ns after a single-qubit gate and for the
/// two-qubit gate time after an entangling gate.
struct ThermalWire {
  double t1_s = 0.0;
  double t2_s = 0.0;
  double p_excited = 0.0;
};

struct NoiseScenario {
  ScenarioKind kind = ScenarioKind::noiseless;
  std::array<double, 2> eps_1q{0.0, 0.0};
  double eps_2q = 0.0;
  std::optional<std::array<ThermalWire, 2>> thermal;
  double gate_time_1q_s = 0.0;
  double gate_time_2q_s = 0.0;
  std::optional<CrosstalkSpec> crosstalk;

  bool has_depolarizing() const { return kind != ScenarioKind::noiseless; }
  bool has_thermal() const {
    return kind == ScenarioKind::depolarizing_thermal ||
           kind == ScenarioKind::depolarizing_crosstalk_thermal;
  }
  bool has_crosstalk() const {
    return kind == ScenarioKind::depolarizing_crosstalk ||
           kind == ScenarioKind::depolarizing_crosstalk_thermal;
  }
  /// Optional blocks must be present exactly when the kind needs them.
  void validate() const;
};

/// Noise channels prebuilt for the hot loop (thermal Kraus operators are
/// lifted to 4x4 once instead of per application).
class CompiledScenario {
 public:
  explicit CompiledScenario(const NoiseScenario& s);

  const NoiseScenario& decl() const { return decl_; }
  DensityMatrix apply_after_gate(DensityMatrix rho, const GateEvent& ev) const;

 private:
  NoiseScenario decl_;
  std::array<std::vector<CMatrix>, 2> thermal_1q_;  // lifted, per wire
  std::array<std::vector<CMatrix>, 2> thermal_2q_;
  CMatrix crosstalk_u_{4};
};

/// Per gate: the unitary, then (when the scenario says so) crosstalk first,
/// then depolarizing, then thermal relaxation.
DensityMatrix run_noisy(const std::vector<GateEvent>& events, const DensityMatrix& rho,
                        const CompiledScenario& scenario);
DensityMatrix run_noisy(const std::vector<GateEvent>& events, const DensityMatrix& rho,
                        const NoiseScenario& scenario);

}  // namespace vqft

#endif  // VQFT_CIRCUITS_HPP
