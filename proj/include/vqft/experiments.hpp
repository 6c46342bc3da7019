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

#ifndef VQFT_EXPERIMENTS_HPP
#define VQFT_EXPERIMENTS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "vqft/calibration.hpp"
#include "vqft/circuits.hpp"
#include "vqft/metrics.hpp"
#include "vqft/optimizer.hpp"

namespace vqft {

enum class TrainingSet { basis, mubs };
std::string to_string(TrainingSet t);
TrainingSet training_set_from_string(const std::string& name);

struct ExperimentConfig {
  ScenarioKind scenario = ScenarioKind::noiseless;
  OptimizerConfig optimizer;
  TrainingSet training_set = TrainingSet::basis;
  int eval_random_n = 1000;
  uint64_t eval_seed = 424242;
  std::string output_dir = ".";
  std::vector<CalibrationRecord> calibration;  // empty -> bundled data
  ScenarioConstants constants;

  /// Scenario-appropriate defaults: basis training and 5000 iterations for
  /// the noiseless case, MUB training and 2000 iterations under noise.
  static ExperimentConfig defaults_for(ScenarioKind kind);
  void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

/// Build the noise model for a scenario. Flat-epsilon depolarizing for the
/// purely synthetic scenarios; the thermal scenarios draw their
/// depolarizing strengths from the per-gate calibration error rates
/// (single-qubit gate error per wire, ECR error for two-qubit gates).
NoiseScenario make_scenario(ScenarioKind kind, const ScenarioConstants& constants,
                            const std::vector<CalibrationRecord>& calibration);
nlohmann::json scenario_to_json(const NoiseScenario& s);

struct ExperimentReport {
  NoiseScenario scenario;
  AnsatzParams trained_params;
  TrainingTrace trace;
  FidelityReport mub_qft;
  FidelityReport mub_variational;
  FidelityReport random_qft;
  FidelityReport random_variational;
  double suppression_factor = 0.0;  // (1 - F_qft) / (1 - F_var) over MUBs
};

/// Train the ansatz under the configured scenario, then evaluate both the
/// trained circuit and the bare QFT under the same noise.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

nlohmann::json report_to_json(const ExperimentReport& report);

/// Writes report.json and trace.csv into cfg.output_dir (created if absent).
void write_report_files(const ExperimentReport& report, const std::string& output_dir);

struct SweepRow {
  double epsilon = 0.0;   // single-qubit strength; two-qubit is 10x, capped at 1
  double fid_qft = 0.0;
  double fid_var = 0.0;
  double diff = 0.0;      // sign convention depends on the scenario family
  bool near_maximally_mixed = false;
};

/// Retrains per epsilon and reports the fidelity difference. Depolarizing-
/// family sweeps report fid_qft - fid_var; crosstalk-family sweeps report
/// fid_var - fid_qft. A row is flagged when every MUB output of both
/// circuits sits within trace distance 0.05 of the maximally mixed state.
std::vector<SweepRow> sweep_epsilon(const ExperimentConfig& cfg,
                                    const std::vector<double>& eps_list);
const std::vector<double>& default_sweep_epsilons();
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);

/// Shared-range histogram of the per-state fidelity lists.
/// CSV columns: bin_left,bin_right,count_var,count_qft.
void histogram_export(const std::vector<double>& variational, const std::vector<double>& qft,
                      int bins, std::ostream& os);

}  // namespace vqft

#endif  // VQFT_EXPERIMENTS_HPP
