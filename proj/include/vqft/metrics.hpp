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

#ifndef VQFT_METRICS_HPP
#define VQFT_METRICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "vqft/circuits.hpp"

namespace vqft {

struct FidelityReport {
  double mean = 0.0;
  double std_dev = 0.0;         // population std over the state set
  double infidelity = 1.0;      // 1 - mean
  std::vector<double> per_state;  // raw values, before clamping
};

/// Average squared Euclidean distance between ansatz and QFT columns over
/// the computational basis. Phase-sensitive on purpose: training directly
/// on fidelity would let each basis state drift by its own phase.
double cost_noiseless(const AnsatzParams& p);

/// Mean of |<i| U^dag(theta) QFT |i>|^2 over the computational basis.
FidelityReport fidelity_pure_avg(const AnsatzParams& p);

/// Mean squared Frobenius distance between the noisy ansatz outputs and the
/// ideal QFT outputs over the 20 MUB states.
double cost_noisy(const AnsatzParams& p, const CompiledScenario& scenario);

/// Uhlmann fidelity ||sqrt(rho) sqrt(q)||_tr^2.
double fidelity_mixed(const DensityMatrix& rho, const DensityMatrix& q);

/// Anything that maps a pure input to the (possibly mixed) circuit output.
using StateRunner = std::function<DensityMatrix(const PureState&)>;

/// Fidelity of `run` against the ideal QFT, averaged over the MUB states.
FidelityReport fidelity_mub_avg(const StateRunner& run);

/// Same, averaged over n random product superpositions; state k is drawn
/// from the stream (seed, k) so the set is independent of evaluation order.
FidelityReport fidelity_random_avg(const StateRunner& run, int n_states, uint64_t seed);

StateRunner noisy_runner(std::vector<GateEvent> circuit, const CompiledScenario& scenario);

}  // namespace vqft

#endif  // VQFT_METRICS_HPP
