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

#ifndef VQFT_OPTIMIZER_HPP
#define VQFT_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vqft/circuits.hpp"
#include "vqft/errors.hpp"

namespace vqft {

struct OptimizerConfig {
  double learning_rate = 0.3;
  int max_iterations = 5000;
  double convergence_delta = 1e-9;
  double gradient_step = 1e-6;  // central-difference h, radians
  uint64_t seed = 11;           // parameter initialization stream
  int snapshot_every = 500;     // parameter snapshots into the trace

  void validate() const;
};

enum class StopReason { converged, max_iters, plateau };
std::string to_string(StopReason r);

struct TraceRecord {
  int iteration = 0;
  double cost = 0.0;
  double fidelity = 0.0;
};

struct TrainingTrace {
  std::vector<TraceRecord> records;
  std::vector<std::pair<int, AnsatzParams>> snapshots;
  StopReason stop_reason = StopReason::max_iters;
  double final_cost = 0.0;
  int iterations = 0;

  /// Mean/std of the cost over the last 200 recorded iterations (or fewer).
  double plateau_cost_mean() const;
  double plateau_cost_std() const;
};

/// iter,cost,fidelity rows for plotting.
void write_trace_csv(const TrainingTrace& trace, std::ostream& os);

using CostFn = std::function<double(const AnsatzParams&)>;
using ProbeFn = std::function<double(const AnsatzParams&)>;

/// Thrown when the cost stays above 10x its initial value for 100
/// consecutive iterations; carries the trace gathered so far.
struct DivergenceError : NumericError {
  DivergenceError(const std::string& what, TrainingTrace t)
      : NumericError(what), trace(std::move(t)) {}
  TrainingTrace trace;
};

/// Central differences (C(p + h e_j) - C(p - h e_j)) / 2h for each angle.
std::array<double, 12> numerical_gradient(const CostFn& cost, const AnsatzParams& p, double h);

/// 12 angles i.i.d. uniform on [0, 2*pi) from the config seed.
AnsatzParams random_init(uint64_t seed);

struct TrainingResult {
  AnsatzParams params;
  TrainingTrace trace;
};

/// Plain gradient descent theta <- theta - lr * grad, stopping when the
/// cost change drops below convergence_delta or at max_iterations. The
/// probe (typically an average fidelity) is recorded at every iteration.
TrainingResult gradient_descent(const CostFn& cost, const OptimizerConfig& cfg,
                                const ProbeFn& probe);

}  // namespace vqft

#endif  // VQFT_OPTIMIZER_HPP
