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

#include "vqft/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "vqft/errors.hpp"

namespace vqft {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(TrainingSet t) { return t == TrainingSet::basis ? "basis" : "mubs"; }

TrainingSet training_set_from_string(const std::string& name) {
  if (name == "basis") return TrainingSet::basis;
  if (name == "mubs") return TrainingSet::mubs;
  throw ConfigError("unknown training set: " + name);
}

ExperimentConfig ExperimentConfig::defaults_for(ScenarioKind kind) {
  ExperimentConfig cfg;
  cfg.scenario = kind;
  if (kind == ScenarioKind::noiseless) {
    cfg.training_set = TrainingSet::basis;
    cfg.optimizer.max_iterations = 5000;
  } else {
    cfg.training_set = TrainingSet::mubs;
    cfg.optimizer.max_iterations = 2000;
  }
  return cfg;
}

void ExperimentConfig::validate() const {
  optimizer.validate();
  if (training_set == TrainingSet::basis && scenario != ScenarioKind::noiseless) {
    throw ConfigError(
        "training_set 'basis' is only valid for the noiseless scenario: a noisy map "
        "trained on basis states does not constrain off-diagonal behavior");
  }
  if (eval_random_n < 1) throw ConfigError("eval_random_n must be >= 1");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  ScenarioKind kind = ScenarioKind::noiseless;
  try {
    if (j.contains("scenario")) kind = scenario_kind_from_string(j.at("scenario"));
    ExperimentConfig cfg = ExperimentConfig::defaults_for(kind);
    if (j.contains("training_set")) cfg.training_set = training_set_from_string(j.at("training_set"));
    if (j.contains("eval_random_n")) cfg.eval_random_n = j.at("eval_random_n").get<int>();
    if (j.contains("eval_seed")) cfg.eval_seed = j.at("eval_seed").get<uint64_t>();
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("optimizer")) {
      const auto& o = j.at("optimizer");
      if (o.contains("learning_rate")) cfg.optimizer.learning_rate = o.at("learning_rate").get<double>();
      if (o.contains("max_iterations")) cfg.optimizer.max_iterations = o.at("max_iterations").get<int>();
      if (o.contains("convergence_delta")) cfg.optimizer.convergence_delta = o.at("convergence_delta").get<double>();
      if (o.contains("gradient_step")) cfg.optimizer.gradient_step = o.at("gradient_step").get<double>();
      if (o.contains("seed")) cfg.optimizer.seed = o.at("seed").get<uint64_t>();
      if (o.contains("snapshot_every")) cfg.optimizer.snapshot_every = o.at("snapshot_every").get<int>();
    }
    cfg.validate();
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  return nlohmann::json{
      {"scenario", to_string(cfg.scenario)},
      {"training_set", to_string(cfg.training_set)},
      {"eval_random_n", cfg.eval_random_n},
      {"eval_seed", cfg.eval_seed},
      {"output_dir", cfg.output_dir},
      {"optimizer",
       {{"learning_rate", cfg.optimizer.learning_rate},
        {"max_iterations", cfg.optimizer.max_iterations},
        {"convergence_delta", cfg.optimizer.convergence_delta},
        {"gradient_step", cfg.optimizer.gradient_step},
        {"seed", cfg.optimizer.seed},
        {"snapshot_every", cfg.optimizer.snapshot_every}}},
  };
}

NoiseScenario make_scenario(ScenarioKind kind, const ScenarioConstants& constants,
                            const std::vector<CalibrationRecord>& calibration) {
  NoiseScenario s;
  s.kind = kind;
  if (kind == ScenarioKind::noiseless) return s;

  const bool needs_calibration = kind == ScenarioKind::depolarizing_thermal ||
                                 kind == ScenarioKind::depolarizing_crosstalk_thermal;
  if (needs_calibration) {
    if (calibration.size() < 2) {
      throw ConfigError("make_scenario: thermal scenarios need calibration rows for both qubits");
    }
    // Depolarizing strengths come straight from the per-gate calibration
    // error rates in the thermal scenarios.
    s.eps_1q = {calibration[0].x_error, calibration[1].x_error};
    const CalibrationRecord* ecr = nullptr;
    for (const auto& r : calibration) {
      if (r.ecr_error) {
        ecr = &r;
        break;
      }
    }
    if (ecr == nullptr || !ecr->two_qubit_gate_time_ns) {
      throw ConfigError("make_scenario: calibration has no ECR error / two-qubit gate time");
    }
    s.eps_2q = *ecr->ecr_error;
    s.thermal = std::array<ThermalWire, 2>{};
    for (int w = 0; w < 2; ++w) {
      const CalibrationRecord& r = calibration[w];
      (*s.thermal)[w] = ThermalWire{
          r.t1_us * 1e-6, r.t2_us * 1e-6,
          excited_population(r.frequency_ghz * 1e9, r.temperature_mk)};
    }
    s.gate_time_1q_s = calibration[0].single_gate_time_ns * 1e-9;
    s.gate_time_2q_s = *ecr->two_qubit_gate_time_ns * 1e-9;
  } else {
    s.eps_1q = {constants.eps_1q, constants.eps_1q};
    s.eps_2q = constants.eps_2q;
  }
  if (kind == ScenarioKind::depolarizing_crosstalk ||
      kind == ScenarioKind::depolarizing_crosstalk_thermal) {
    s.crosstalk = CrosstalkSpec{constants.zeta_hz, constants.crosstalk_duration_s};
  }
  s.validate();
  return s;
}

nlohmann::json scenario_to_json(const NoiseScenario& s) {
  nlohmann::json j{{"kind", to_string(s.kind)},
                   {"eps_1q", {s.eps_1q[0], s.eps_1q[1]}},
                   {"eps_2q", s.eps_2q}};
  if (s.thermal) {
    nlohmann::json wires = nlohmann::json::array();
    for (const ThermalWire& w : *s.thermal) {
      wires.push_back({{"t1_s", w.t1_s}, {"t2_s", w.t2_s}, {"p_excited", w.p_excited}});
    }
    j["thermal"] = wires;
    j["gate_time_1q_s"] = s.gate_time_1q_s;
    j["gate_time_2q_s"] = s.gate_time_2q_s;
  }
  if (s.crosstalk) {
    j["crosstalk"] = {{"zeta_hz", s.crosstalk->zeta_hz}, {"duration_s", s.crosstalk->duration_s}};
  }
  return j;
}

namespace {

nlohmann::json fidelity_to_json(const FidelityReport& r) {
  return nlohmann::json{{"mean", r.mean},
                        {"std_dev", r.std_dev},
                        {"infidelity", r.infidelity},
                        {"per_state", r.per_state}};
}

double suppression(const FidelityReport& qft, const FidelityReport& var) {
  const double iq = std::max(qft.infidelity, 1e-15);
  const double iv = std::max(var.infidelity, 1e-15);
  return iq / iv;
}

struct TrainingSetup {
  CostFn cost;
  ProbeFn probe;
};

TrainingSetup make_training_setup(const ExperimentConfig& cfg, const CompiledScenario& cs) {
  if (cfg.training_set == TrainingSet::basis) {
    return TrainingSetup{[](const AnsatzParams& p) { return cost_noiseless(p); },
                         [](const AnsatzParams& p) { return fidelity_pure_avg(p).mean; }};
  }
  return TrainingSetup{
      [&cs](const AnsatzParams& p) { return cost_noisy(p, cs); },
      [&cs](const AnsatzParams& p) {
        return fidelity_mub_avg(noisy_runner(ansatz_circuit(p), cs)).mean;
      }};
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<CalibrationRecord>& records =
      cfg.calibration.empty() ? bundled_calibration() : cfg.calibration;
  const NoiseScenario scenario = make_scenario(cfg.scenario, cfg.constants, records);
  const CompiledScenario cs(scenario);

  const TrainingSetup setup = make_training_setup(cfg, cs);
  TrainingResult trained = gradient_descent(setup.cost, cfg.optimizer, setup.probe);

  ExperimentReport report;
  report.scenario = scenario;
  report.trained_params = trained.params;
  report.trace = std::move(trained.trace);

  const StateRunner var_run = noisy_runner(ansatz_circuit(report.trained_params), cs);
  const StateRunner qft_run = noisy_runner(ideal_qft_circuit(), cs);
  report.mub_variational = fidelity_mub_avg(var_run);
  report.mub_qft = fidelity_mub_avg(qft_run);
  report.random_variational = fidelity_random_avg(var_run, cfg.eval_random_n, cfg.eval_seed);
  report.random_qft = fidelity_random_avg(qft_run, cfg.eval_random_n, cfg.eval_seed);
  report.suppression_factor = suppression(report.mub_qft, report.mub_variational);
  return report;
}

nlohmann::json report_to_json(const ExperimentReport& report) {
  return nlohmann::json{
      {"schema_version", 1},
      {"scenario", scenario_to_json(report.scenario)},
      {"trained_params",
       std::vector<double>(report.trained_params.angles.begin(),
                           report.trained_params.angles.end())},
      {"trace_summary",
       {{"final_cost", report.trace.final_cost},
        {"iterations", report.trace.iterations},
        {"stop_reason", to_string(report.trace.stop_reason)},
        {"plateau_cost_mean", report.trace.plateau_cost_mean()},
        {"plateau_cost_std", report.trace.plateau_cost_std()}}},
      {"fidelity_mub",
       {{"qft", fidelity_to_json(report.mub_qft)},
        {"variational", fidelity_to_json(report.mub_variational)}}},
      {"fidelity_random",
       {{"qft", fidelity_to_json(report.random_qft)},
        {"variational", fidelity_to_json(report.random_variational)}}},
      {"suppression_factor", report.suppression_factor},
  };
}

void write_report_files(const ExperimentReport& report, const std::string& output_dir) {
  std::filesystem::create_directories(output_dir);
  {
    std::ofstream out(std::filesystem::path(output_dir) / "report.json");
    if (!out) throw ConfigError("cannot write report.json under " + output_dir);
    out << report_to_json(report).dump(2) << "\n";
  }
  {
    std::ofstream out(std::filesystem::path(output_dir) / "trace.csv");
    if (!out) throw ConfigError("cannot write trace.csv under " + output_dir);
    write_trace_csv(report.trace, out);
  }
}

const std::vector<double>& default_sweep_epsilons() {
  static const std::vector<double> eps = {1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
  return eps;
}

std::vector<SweepRow> sweep_epsilon(const ExperimentConfig& cfg,
                                    const std::vector<double>& eps_list) {
  cfg.validate();
  if (cfg.scenario == ScenarioKind::noiseless) {
    throw ConfigError("sweep_epsilon: pick a noisy scenario to sweep");
  }
  const std::vector<CalibrationRecord>& records =
      cfg.calibration.empty() ? bundled_calibration() : cfg.calibration;

  CMatrix mixed = CMatrix::identity(4);
  mixed *= 0.25;

  std::vector<SweepRow> rows;
  for (double eps : eps_list) {
    if (eps < 0.0 || eps > 1.0) throw ConfigError("sweep_epsilon: epsilon not in [0,1]");
    NoiseScenario scenario = make_scenario(cfg.scenario, cfg.constants, records);
    scenario.eps_1q = {eps, eps};
    scenario.eps_2q = std::min(1.0, 10.0 * eps);
    const CompiledScenario cs(scenario);

    OptimizerConfig opt = cfg.optimizer;
    opt.max_iterations = std::min(opt.max_iterations, 500);  // converges in ~300 under noise
    const TrainingResult trained = gradient_descent(
        [&cs](const AnsatzParams& p) { return cost_noisy(p, cs); }, opt, ProbeFn{});

    const StateRunner var_run = noisy_runner(ansatz_circuit(trained.params), cs);
    const StateRunner qft_run = noisy_runner(ideal_qft_circuit(), cs);
    const FidelityReport fv = fidelity_mub_avg(var_run);
    const FidelityReport fq = fidelity_mub_avg(qft_run);

    SweepRow row;
    row.epsilon = eps;
    row.fid_var = fv.mean;
    row.fid_qft = fq.mean;
    const bool crosstalk_family = scenario.has_crosstalk();
    row.diff = crosstalk_family ? fv.mean - fq.mean : fq.mean - fv.mean;

    double max_dist = 0.0;
    for (const auto& basis : mub_states().bases) {
      for (const PureState& e : basis) {
        for (const StateRunner* run : {&var_run, &qft_run}) {
          const DensityMatrix out = (*run)(e);
          max_dist = std::max(max_dist, 0.5 * trace_norm(out.mat - mixed));
        }
      }
    }
    row.near_maximally_mixed = max_dist < 0.05;
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << "epsilon,fid_qft,fid_var,diff,near_maximally_mixed\n";
  for (const SweepRow& r : rows) {
    os << fmt17(r.epsilon) << ',' << fmt17(r.fid_qft) << ',' << fmt17(r.fid_var) << ','
       << fmt17(r.diff) << ',' << (r.near_maximally_mixed ? 1 : 0) << "\n";
  }
}

void histogram_export(const std::vector<double>& variational, const std::vector<double>& qft,
                      int bins, std::ostream& os) {
  if (variational.empty() || qft.empty()) {
    throw ConfigError("histogram_export: empty fidelity list");
  }
  if (bins < 1) throw ConfigError("histogram_export: bins must be >= 1");

  double lo = variational.front();
  double hi = lo;
  for (const auto* series : {&variational, &qft}) {
    for (double v : *series) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi <= lo) hi = lo + 1e-12;
  const double width = (hi - lo) / bins;

  std::vector<long> count_var(bins, 0), count_qft(bins, 0);
  auto bin_of = [&](double v) {
    const int k = static_cast<int>((v - lo) / width);
    return std::clamp(k, 0, bins - 1);
  };
  for (double v : variational) ++count_var[bin_of(v)];
  for (double v : qft) ++count_qft[bin_of(v)];

  os << "bin_left,bin_right,count_var,count_qft\n";
  for (int k = 0; k < bins; ++k) {
    os << fmt17(lo + k * width) << ',' << fmt17(lo + (k + 1) * width) << ',' << count_var[k]
       << ',' << count_qft[k] << "\n";
  }
}

}  // namespace vqft
