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

#include "vqft/optimizer.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "vqft/rng.hpp"

namespace vqft {

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0)) throw ConfigError("OptimizerConfig: learning_rate must be > 0");
  if (max_iterations < 1) throw ConfigError("OptimizerConfig: max_iterations must be >= 1");
  if (convergence_delta < 0.0) throw ConfigError("OptimizerConfig: convergence_delta must be >= 0");
  if (!(gradient_step > 0.0)) throw ConfigError("OptimizerConfig: gradient_step must be > 0");
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::converged: return "converged";
    case StopReason::max_iters: return "max_iters";
    case StopReason::plateau: return "plateau";
  }
  return "unknown";
}

namespace {

std::pair<double, double> tail_stats(const std::vector<TraceRecord>& records, size_t window) {
  if (records.empty()) return {0.0, 0.0};
  const size_t n = std::min(window, records.size());
  const size_t start = records.size() - n;
  double mean = 0.0;
  for (size_t i = start; i < records.size(); ++i) mean += records[i].cost;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (size_t i = start; i < records.size(); ++i) {
    const double d = records[i].cost - mean;
    var += d * d;
  }
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace

double TrainingTrace::plateau_cost_mean() const { return tail_stats(records, 200).first; }
double TrainingTrace::plateau_cost_std() const { return tail_stats(records, 200).second; }

void write_trace_csv(const TrainingTrace& trace, std::ostream& os) {
  os << "iter,cost,fidelity\n";
  char buf[96];
  for (const TraceRecord& r : trace.records) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", r.iteration, r.cost, r.fidelity);
    os << buf;
  }
}

std::array<double, 12> numerical_gradient(const CostFn& cost, const AnsatzParams& p, double h) {
  if (!(h > 0.0)) throw ConfigError("numerical_gradient: step must be > 0");
  std::array<double, 12> grad{};
  for (int j = 0; j < 12; ++j) {
    AnsatzParams plus = p;
    AnsatzParams minus = p;
    plus.angles[j] += h;
    minus.angles[j] -= h;
    const double cp = cost(plus);
    const double cm = cost(minus);
    if (!std::isfinite(cp) || !std::isfinite(cm)) {
      throw NumericError("numerical_gradient: non-finite cost evaluation");
    }
    grad[j] = (cp - cm) / (2.0 * h);
  }
  return grad;
}

AnsatzParams random_init(uint64_t seed) {
  SplitStream rs(seed, 0);
  AnsatzParams p;
  for (double& a : p.angles) a = rs.next_angle();
  return p;
}

TrainingResult gradient_descent(const CostFn& cost, const OptimizerConfig& cfg,
                                const ProbeFn& probe) {
  cfg.validate();
  AnsatzParams p = random_init(cfg.seed);
  TrainingTrace trace;
  trace.snapshots.emplace_back(0, p);

  double prev_cost = cost(p);
  if (!std::isfinite(prev_cost)) throw NumericError("gradient_descent: non-finite initial cost");
  const double initial_cost = prev_cost;
  trace.records.push_back({0, prev_cost, probe ? probe(p) : 0.0});

  int diverging_streak = 0;
  StopReason reason = StopReason::max_iters;
  int iter = 0;
  for (iter = 1; iter <= cfg.max_iterations; ++iter) {
    const auto grad = numerical_gradient(cost, p, cfg.gradient_step);
    for (int j = 0; j < 12; ++j) p.angles[j] -= cfg.learning_rate * grad[j];

    const double c = cost(p);
    if (!std::isfinite(c)) throw NumericError("gradient_descent: non-finite cost");
    trace.records.push_back({iter, c, probe ? probe(p) : 0.0});
    if (cfg.snapshot_every > 0 && iter % cfg.snapshot_every == 0) {
      trace.snapshots.emplace_back(iter, p);
    }

    if (c > 10.0 * initial_cost && initial_cost > 0.0) {
      if (++diverging_streak >= 100) {
        trace.final_cost = c;
        trace.iterations = iter;
        throw DivergenceError("gradient_descent: cost exceeded 10x its initial value "
                              "for 100 consecutive iterations",
                              std::move(trace));
      }
    } else {
      diverging_streak = 0;
    }

    if (std::abs(c - prev_cost) < cfg.convergence_delta) {
      prev_cost = c;
      reason = StopReason::converged;
      break;
    }
    prev_cost = c;
  }

  trace.iterations = std::min(iter, cfg.max_iterations);
  trace.final_cost = prev_cost;
  if (reason == StopReason::max_iters) {
    const auto [mean, std] = tail_stats(trace.records, 200);
    if (mean > 0.0 && std < 0.1 * mean) reason = StopReason::plateau;
  }
  trace.stop_reason = reason;
  trace.snapshots.emplace_back(trace.iterations, p);
  return TrainingResult{p, std::move(trace)};
}

}  // namespace vqft
