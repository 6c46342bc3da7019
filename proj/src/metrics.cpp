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

#include "vqft/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "vqft/errors.hpp"

namespace vqft {

namespace {

struct MubTargets {
  std::vector<DensityMatrix> inputs;   // |e><e| for the 20 MUB states
  std::vector<DensityMatrix> targets;  // QFT |e><e| QFT^dag
  std::vector<PureState> pure_inputs;
};

const MubTargets& mub_targets() {
  static const MubTargets t = [] {
    MubTargets out;
    const CMatrix& qft = ideal_qft_unitary();
    for (const auto& basis : mub_states().bases) {
      for (const PureState& e : basis) {
        out.pure_inputs.push_back(e);
        const DensityMatrix rho = to_density(e);
        out.inputs.push_back(rho);
        out.targets.push_back(conjugate(qft, rho));
      }
    }
    return out;
  }();
  return t;
}

FidelityReport summarize(std::vector<double> raw) {
  FidelityReport r;
  r.per_state = std::move(raw);
  double sum = 0.0;
  for (double f : r.per_state) sum += std::clamp(f, 0.0, 1.0);
  r.mean = sum / static_cast<double>(r.per_state.size());
  double var = 0.0;
  for (double f : r.per_state) {
    const double d = std::clamp(f, 0.0, 1.0) - r.mean;
    var += d * d;
  }
  r.std_dev = std::sqrt(var / static_cast<double>(r.per_state.size()));
  r.infidelity = 1.0 - r.mean;
  return r;
}

}  // namespace

double cost_noiseless(const AnsatzParams& p) {
  const CMatrix u = circuit_unitary(ansatz_circuit(p));
  const CMatrix& qft = ideal_qft_unitary();
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int r = 0; r < 4; ++r) total += std::norm(u.at(r, i) - qft.at(r, i));
  }
  const double cost = total / 4.0;
  if (!std::isfinite(cost)) throw NumericError("cost_noiseless: non-finite value");
  return cost;
}

FidelityReport fidelity_pure_avg(const AnsatzParams& p) {
  const std::vector<GateEvent> circuit = ansatz_circuit(p);
  const CMatrix& qft = ideal_qft_unitary();
  std::vector<double> fids;
  for (int i = 0; i < 4; ++i) {
    const PureState basis = computational_basis(i);
    const PureState got = run_noiseless(circuit, basis);
    const PureState want = apply(qft, basis);
    fids.push_back(std::norm(inner(got, want)));
  }
  return summarize(std::move(fids));
}

double cost_noisy(const AnsatzParams& p, const CompiledScenario& scenario) {
  const std::vector<GateEvent> circuit = ansatz_circuit(p);
  const MubTargets& t = mub_targets();
  double total = 0.0;
  for (size_t k = 0; k < t.inputs.size(); ++k) {
    const DensityMatrix out = run_noisy(circuit, t.inputs[k], scenario);
    const double d = frobenius_norm(out.mat - t.targets[k].mat);
    total += d * d;
  }
  const double cost = total / static_cast<double>(t.inputs.size());
  if (!std::isfinite(cost)) throw NumericError("cost_noisy: non-finite value");
  return cost;
}

double fidelity_mixed(const DensityMatrix& rho, const DensityMatrix& q) {
  const CMatrix m = hermitian_sqrt(rho.mat) * hermitian_sqrt(q.mat);
  const double tn = trace_norm(m);
  return tn * tn;
}

FidelityReport fidelity_mub_avg(const StateRunner& run) {
  const MubTargets& t = mub_targets();
  std::vector<double> fids;
  for (size_t k = 0; k < t.pure_inputs.size(); ++k) {
    fids.push_back(fidelity_mixed(run(t.pure_inputs[k]), t.targets[k]));
  }
  return summarize(std::move(fids));
}

FidelityReport fidelity_random_avg(const StateRunner& run, int n_states, uint64_t seed) {
  if (n_states < 1) throw ConfigError("fidelity_random_avg: need at least one state");
  const CMatrix& qft = ideal_qft_unitary();
  std::vector<double> fids;
  fids.reserve(static_cast<size_t>(n_states));
  for (int k = 0; k < n_states; ++k) {
    SplitStream rs(seed, static_cast<uint64_t>(k));
    const PureState psi = random_superposition(rs);
    const DensityMatrix target = conjugate(qft, to_density(psi));
    fids.push_back(fidelity_mixed(run(psi), target));
  }
  return summarize(std::move(fids));
}

StateRunner noisy_runner(std::vector<GateEvent> circuit, const CompiledScenario& scenario) {
  return [circuit = std::move(circuit), scenario](const PureState& psi) {
    return run_noisy(circuit, to_density(psi), scenario);
  };
}

}  // namespace vqft
