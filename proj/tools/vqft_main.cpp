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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vqft/experiments.hpp"

namespace {

using vqft::ConfigError;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

struct CommonOpts {
  std::string config_file;
  std::string scenario;
  std::string calibration_file;
  std::string out_dir;
  std::optional<uint64_t> seed;
  std::optional<int> iters;
  std::optional<double> lr;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_file, "experiment config JSON");
  cmd->add_option("--scenario", o.scenario,
                  "noiseless | depolarizing | depolarizing_thermal | depolarizing_crosstalk | "
                  "depolarizing_crosstalk_thermal");
  cmd->add_option("--calibration", o.calibration_file,
                  "device calibration CSV (defaults to the bundled data)");
  cmd->add_option("--seed", o.seed, "parameter-initialization seed");
  cmd->add_option("--iters", o.iters, "max gradient-descent iterations");
  cmd->add_option("--lr", o.lr, "learning rate");
  cmd->add_option("--out", o.out_dir, "output directory");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

vqft::ExperimentConfig build_config_impl(const CommonOpts& o) {
  vqft::ExperimentConfig cfg;
  if (!o.config_file.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(slurp(o.config_file));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config parse error: ") + e.what());
    }
    cfg = vqft::config_from_json(j);
  }
  if (!o.scenario.empty()) {
    const auto kind = vqft::scenario_kind_from_string(o.scenario);
    if (o.config_file.empty()) {
      cfg = vqft::ExperimentConfig::defaults_for(kind);
    } else {
      cfg.scenario = kind;
      if (kind == vqft::ScenarioKind::noiseless) {
        cfg.training_set = vqft::TrainingSet::basis;
      } else if (cfg.training_set == vqft::TrainingSet::basis) {
        cfg.training_set = vqft::TrainingSet::mubs;
      }
    }
  }
  if (!o.calibration_file.empty()) {
    cfg.calibration = vqft::parse_calibration(slurp(o.calibration_file));
  }
  if (o.seed) cfg.optimizer.seed = *o.seed;
  if (o.iters) cfg.optimizer.max_iterations = *o.iters;
  if (o.lr) cfg.optimizer.learning_rate = *o.lr;
  if (!o.out_dir.empty()) cfg.output_dir = o.out_dir;
  cfg.validate();
  return cfg;
}

// Anything thrown while assembling the configuration is a config error.
vqft::ExperimentConfig build_config(const CommonOpts& o) {
  try {
    return build_config_impl(o);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

void dump_trace_on_failure(const vqft::TrainingTrace& trace, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::ofstream out(std::filesystem::path(out_dir) / "trace_dump.csv");
  if (out) vqft::write_trace_csv(trace, out);
}

vqft::AnsatzParams params_from_file(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("params parse error: ") + e.what());
  }
  if (j.is_array()) return vqft::AnsatzParams::from_vector(j.get<std::vector<double>>());
  if (j.is_object() && j.contains("trained_params")) {
    return vqft::AnsatzParams::from_vector(j.at("trained_params").get<std::vector<double>>());
  }
  throw ConfigError("params file must be a 12-element array or contain 'trained_params'");
}

int cmd_report(const vqft::ExperimentConfig& cfg) {
  const vqft::ExperimentReport report = vqft::run_experiment(cfg);
  vqft::write_report_files(report, cfg.output_dir);
  std::cout << "scenario " << vqft::to_string(cfg.scenario)
            << ": MUB fidelity variational=" << report.mub_variational.mean
            << " qft=" << report.mub_qft.mean
            << " suppression=" << report.suppression_factor << "\n"
            << "wrote " << cfg.output_dir << "/report.json and trace.csv\n";
  return kExitOk;
}

int cmd_train(const vqft::ExperimentConfig& cfg) {
  const vqft::ExperimentReport report = vqft::run_experiment(cfg);
  std::filesystem::create_directories(cfg.output_dir);
  {
    std::ofstream out(std::filesystem::path(cfg.output_dir) / "trained_params.json");
    if (!out) throw ConfigError("cannot write trained_params.json under " + cfg.output_dir);
    nlohmann::json j{{"trained_params",
                      std::vector<double>(report.trained_params.angles.begin(),
                                          report.trained_params.angles.end())},
                     {"scenario", vqft::to_string(cfg.scenario)},
                     {"final_cost", report.trace.final_cost},
                     {"stop_reason", vqft::to_string(report.trace.stop_reason)},
                     {"iterations", report.trace.iterations}};
    out << j.dump(2) << "\n";
  }
  {
    std::ofstream out(std::filesystem::path(cfg.output_dir) / "trace.csv");
    if (!out) throw ConfigError("cannot write trace.csv under " + cfg.output_dir);
    vqft::write_trace_csv(report.trace, out);
  }
  std::cout << "trained " << vqft::to_string(cfg.scenario)
            << ": final cost=" << report.trace.final_cost << " ("
            << vqft::to_string(report.trace.stop_reason) << " after "
            << report.trace.iterations << " iterations)\n"
            << "wrote " << cfg.output_dir << "/trained_params.json and trace.csv\n";
  return kExitOk;
}

int cmd_eval(const vqft::ExperimentConfig& cfg, const std::string& params_file) {
  const vqft::AnsatzParams params = params_from_file(params_file);
  const auto& records = cfg.calibration.empty() ? vqft::bundled_calibration() : cfg.calibration;
  const vqft::NoiseScenario scenario =
      vqft::make_scenario(cfg.scenario, cfg.constants, records);
  const vqft::CompiledScenario cs(scenario);
  const auto var_run = vqft::noisy_runner(vqft::ansatz_circuit(params), cs);
  const auto qft_run = vqft::noisy_runner(vqft::ideal_qft_circuit(), cs);

  const vqft::FidelityReport mub_var = vqft::fidelity_mub_avg(var_run);
  const vqft::FidelityReport mub_qft = vqft::fidelity_mub_avg(qft_run);
  const vqft::FidelityReport rand_var =
      vqft::fidelity_random_avg(var_run, cfg.eval_random_n, cfg.eval_seed);
  const vqft::FidelityReport rand_qft =
      vqft::fidelity_random_avg(qft_run, cfg.eval_random_n, cfg.eval_seed);

  nlohmann::json j{
      {"schema_version", 1},
      {"scenario", vqft::scenario_to_json(scenario)},
      {"trained_params",
       std::vector<double>(params.angles.begin(), params.angles.end())},
      {"fidelity_mub",
       {{"qft",
         {{"mean", mub_qft.mean}, {"std_dev", mub_qft.std_dev},
          {"infidelity", mub_qft.infidelity}, {"per_state", mub_qft.per_state}}},
        {"variational",
         {{"mean", mub_var.mean}, {"std_dev", mub_var.std_dev},
          {"infidelity", mub_var.infidelity}, {"per_state", mub_var.per_state}}}}},
      {"fidelity_random",
       {{"qft",
         {{"mean", rand_qft.mean}, {"std_dev", rand_qft.std_dev},
          {"infidelity", rand_qft.infidelity}, {"per_state", rand_qft.per_state}}},
        {"variational",
         {{"mean", rand_var.mean}, {"std_dev", rand_var.std_dev},
          {"infidelity", rand_var.infidelity}, {"per_state", rand_var.per_state}}}}},
      {"suppression_factor",
       std::max(mub_qft.infidelity, 1e-15) / std::max(mub_var.infidelity, 1e-15)}};

  std::filesystem::create_directories(cfg.output_dir);
  std::ofstream out(std::filesystem::path(cfg.output_dir) / "evaluation.json");
  if (!out) throw ConfigError("cannot write evaluation.json under " + cfg.output_dir);
  out << j.dump(2) << "\n";
  std::cout << "evaluated " << vqft::to_string(cfg.scenario)
            << ": MUB variational=" << mub_var.mean << " qft=" << mub_qft.mean << "\n"
            << "wrote " << cfg.output_dir << "/evaluation.json\n";
  return kExitOk;
}

int cmd_sweep(const vqft::ExperimentConfig& cfg, const std::vector<double>& eps_list) {
  const auto rows =
      vqft::sweep_epsilon(cfg, eps_list.empty() ? vqft::default_sweep_epsilons() : eps_list);
  std::filesystem::create_directories(cfg.output_dir);
  std::ofstream out(std::filesystem::path(cfg.output_dir) / "sweep.csv");
  if (!out) throw ConfigError("cannot write sweep.csv under " + cfg.output_dir);
  vqft::write_sweep_csv(rows, out);
  std::cout << "swept " << rows.size() << " epsilon values, wrote " << cfg.output_dir
            << "/sweep.csv\n";
  return kExitOk;
}

int cmd_histogram(const std::string& report_file, int bins, const std::string& out_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(report_file));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("report parse error: ") + e.what());
  }
  std::vector<double> var, qft;
  try {
    var = j.at("fidelity_random").at("variational").at("per_state").get<std::vector<double>>();
    qft = j.at("fidelity_random").at("qft").at("per_state").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("report is missing per-state fidelity lists: ") + e.what());
  }
  std::filesystem::create_directories(out_dir);
  std::ofstream out(std::filesystem::path(out_dir) / "histogram.csv");
  if (!out) throw ConfigError("cannot write histogram.csv under " + out_dir);
  vqft::histogram_export(var, qft, bins, out);
  std::cout << "wrote " << out_dir << "/histogram.csv (" << bins << " bins)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-qubit variational QFT trainer and density-matrix noise simulator"};
  app.require_subcommand(1);

  CommonOpts train_opts, eval_opts, sweep_opts, report_opts;
  std::string params_file, hist_report;
  std::vector<double> eps_list;
  int hist_bins = 50;
  std::string hist_out = ".";

  CLI::App* train = app.add_subcommand("train", "train the ansatz and write params + trace");
  add_common(train, train_opts);

  CLI::App* eval = app.add_subcommand("eval", "evaluate trained params against the noisy QFT");
  add_common(eval, eval_opts);
  eval->add_option("--params-file", params_file,
                   "JSON with 'trained_params' (or a bare 12-element array)")
      ->required();

  CLI::App* sweep = app.add_subcommand("sweep", "retrain across depolarizing strengths");
  add_common(sweep, sweep_opts);
  sweep->add_option("--eps", eps_list, "epsilon values (default: 1e-8 .. 1e-1 by decades)");

  CLI::App* report = app.add_subcommand("report", "full pipeline: train, evaluate, write report");
  add_common(report, report_opts);

  CLI::App* hist = app.add_subcommand("histogram", "bin per-state fidelities from a report");
  hist->add_option("--report", hist_report, "report.json produced by the report command")
      ->required();
  hist->add_option("--bins", hist_bins, "number of bins");
  hist->add_option("--out", hist_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  std::string out_dir_for_dump = ".";
  try {
    if (train->parsed()) {
      const auto cfg = build_config(train_opts);
      out_dir_for_dump = cfg.output_dir;
      return cmd_train(cfg);
    }
    if (eval->parsed()) {
      return cmd_eval(build_config(eval_opts), params_file);
    }
    if (sweep->parsed()) {
      const auto cfg = build_config(sweep_opts);
      out_dir_for_dump = cfg.output_dir;
      return cmd_sweep(cfg, eps_list);
    }
    if (report->parsed()) {
      const auto cfg = build_config(report_opts);
      out_dir_for_dump = cfg.output_dir;
      return cmd_report(cfg);
    }
    if (hist->parsed()) {
      return cmd_histogram(hist_report, hist_bins, hist_out);
    }
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const vqft::DivergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    dump_trace_on_failure(e.trace, out_dir_for_dump);
    std::cerr << "partial training trace dumped to " << out_dir_for_dump << "/trace_dump.csv\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}
