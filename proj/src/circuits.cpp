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

#include "vqft/circuits.hpp"

#include <cmath>
#include <stdexcept>

#include "vqft/gates.hpp"

namespace vqft {

AnsatzParams AnsatzParams::from_vector(const std::vector<double>& v) {
  if (v.size() != 12) {
    throw std::invalid_argument("AnsatzParams: expected exactly 12 angles, got " +
                                std::to_string(v.size()));
  }
  AnsatzParams p;
  for (int i = 0; i < 12; ++i) p.angles[i] = v[i];
  p.check_finite();
  return p;
}

void AnsatzParams::check_finite() const {
  for (double a : angles) {
    if (!std::isfinite(a)) throw std::invalid_argument("AnsatzParams: non-finite angle");
  }
}

GateEvent single_qubit_event(const CMatrix& u, int wire) {
  return GateEvent{u, embed(u, wire), {wire, wire}, 1};
}

GateEvent two_qubit_event(const CMatrix& u) {
  if (u.dim() != 4) throw std::invalid_argument("two_qubit_event: expected 4x4");
  return GateEvent{u, u, {0, 1}, 2};
}

std::vector<GateEvent> ideal_qft_circuit() {
  const double half_pi = std::acos(0.0);
  std::vector<GateEvent> evs;
  evs.push_back(single_qubit_event(hadamard(), 0));
  evs.push_back(two_qubit_event(cphase(half_pi)));
  evs.push_back(single_qubit_event(hadamard(), 1));
  evs.push_back(two_qubit_event(swap_gate()));
  return evs;
}

const CMatrix& ideal_qft_unitary() {
  static const CMatrix u = circuit_unitary(ideal_qft_circuit());
  return u;
}

std::vector<GateEvent> ansatz_circuit(const AnsatzParams& p) {
  p.check_finite();
  const auto& a = p.angles;
  std::vector<GateEvent> evs;
  evs.push_back(single_qubit_event(u3(a[0], a[1], a[2]), 1));
  evs.push_back(two_qubit_event(cnot(1)));
  evs.push_back(single_qubit_event(u3(a[3], a[4], a[5]), 1));
  evs.push_back(two_qubit_event(cnot(1)));
  evs.push_back(single_qubit_event(u3(a[6], a[7], a[8]), 1));
  evs.push_back(single_qubit_event(u3(a[9], a[10], a[11]), 0));
  evs.push_back(two_qubit_event(swap_gate()));
  return evs;
}

CMatrix circuit_unitary(const std::vector<GateEvent>& events) {
  CMatrix u = CMatrix::identity(4);
  for (const GateEvent& ev : events) u = ev.lifted * u;
  return u;
}

PureState run_noiseless(const std::vector<GateEvent>& events, const PureState& psi) {
  PureState out = psi;
  for (const GateEvent& ev : events) out = apply(ev.lifted, out);
  return out;
}

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::noiseless: return "noiseless";
    case ScenarioKind::depolarizing: return "depolarizing";
    case ScenarioKind::depolarizing_thermal: return "depolarizing_thermal";
    case ScenarioKind::depolarizing_crosstalk: return "depolarizing_crosstalk";
    case ScenarioKind::depolarizing_crosstalk_thermal: return "depolarizing_crosstalk_thermal";
  }
  throw std::logic_error("to_string: bad ScenarioKind");
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
  if (name == "noiseless") return ScenarioKind::noiseless;
  if (name == "depolarizing") return ScenarioKind::depolarizing;
  if (name == "depolarizing_thermal") return ScenarioKind::depolarizing_thermal;
  if (name == "depolarizing_crosstalk") return ScenarioKind::depolarizing_crosstalk;
  if (name == "depolarizing_crosstalk_thermal") return ScenarioKind::depolarizing_crosstalk_thermal;
  throw std::invalid_argument("unknown scenario kind: " + name);
}

void NoiseScenario::validate() const {
  if (has_depolarizing()) {
    for (double e : eps_1q) {
      if (e < 0.0 || e > 1.0) throw std::invalid_argument("NoiseScenario: eps_1q not in [0,1]");
    }
    if (eps_2q < 0.0 || eps_2q > 1.0) {
      throw std::invalid_argument("NoiseScenario: eps_2q not in [0,1]");
    }
  }
  if (has_thermal() != thermal.has_value()) {
    throw std::invalid_argument("NoiseScenario: thermal block must be present iff kind uses it");
  }
  if (has_crosstalk() != crosstalk.has_value()) {
    throw std::invalid_argument("NoiseScenario: crosstalk block must be present iff kind uses it");
  }
  if (has_thermal() && (gate_time_1q_s < 0.0 || gate_time_2q_s < 0.0)) {
    throw std::invalid_argument("NoiseScenario: negative thermal gate time");
  }
}

namespace {

std::vector<CMatrix> lifted_thermal_ops(const ThermalWire& w, double gate_time_s, int wire) {
  const ThermalParams tp{w.t1_s, w.t2_s, gate_time_s, w.p_excited};
  const KrausChannel ch = thermal_kraus(thermal_probs(tp));
  std::vector<CMatrix> out;
  out.reserve(ch.ops.size());
  for (const CMatrix& k : ch.ops) out.push_back(embed(k, wire));
  return out;
}

DensityMatrix kraus_apply_lifted(const DensityMatrix& rho, const std::vector<CMatrix>& ops) {
  CMatrix out(4);
  for (const CMatrix& k : ops) out += k * rho.mat * adjoint(k);
  return DensityMatrix{out};
}

}  // namespace

CompiledScenario::CompiledScenario(const NoiseScenario& s) : decl_(s) {
  decl_.validate();
  if (decl_.has_thermal()) {
    for (int w = 0; w < 2; ++w) {
      thermal_1q_[w] = lifted_thermal_ops((*decl_.thermal)[w], decl_.gate_time_1q_s, w);
      thermal_2q_[w] = lifted_thermal_ops((*decl_.thermal)[w], decl_.gate_time_2q_s, w);
    }
  }
  if (decl_.has_crosstalk()) {
    crosstalk_u_ = crosstalk_unitary(decl_.crosstalk->zeta_hz, decl_.crosstalk->duration_s);
  }
}

DensityMatrix CompiledScenario::apply_after_gate(DensityMatrix rho, const GateEvent& ev) const {
  if (!decl_.has_depolarizing()) return rho;
  if (ev.n_wires == 1) {
    const int w = ev.wires[0];
    rho = depolarize(rho, decl_.eps_1q[w], w);
    if (decl_.has_thermal()) rho = kraus_apply_lifted(rho, thermal_1q_[w]);
  } else {
    if (decl_.has_crosstalk()) rho = conjugate(crosstalk_u_, rho);
    rho = depolarize(rho, decl_.eps_2q);
    if (decl_.has_thermal()) {
      rho = kraus_apply_lifted(rho, thermal_2q_[0]);
      rho = kraus_apply_lifted(rho, thermal_2q_[1]);
    }
  }
  return rho;
}

DensityMatrix run_noisy(const std::vector<GateEvent>& events, const DensityMatrix& rho,
                        const CompiledScenario& scenario) {
  DensityMatrix out = rho;
  for (const GateEvent& ev : events) {
    out = conjugate(ev.lifted, out);
    out = scenario.apply_after_gate(std::move(out), ev);
  }
  if (!out.mat.is_finite() || out.trace_error() > 1e-8) {
    throw std::runtime_error("run_noisy: state invariants violated");
  }
  return out;
}

DensityMatrix run_noisy(const std::vector<GateEvent>& events, const DensityMatrix& rho,
                        const NoiseScenario& scenario) {
  return run_noisy(events, rho, CompiledScenario(scenario));
}

}  // namespace vqft
