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

#ifndef VQFT_CALIBRATION_HPP
#define VQFT_CALIBRATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "vqft/channels.hpp"

namespace vqft {

/// One device-calibration row. Units match the column names; conversions to
/// SI happen when thermal parameters are built.
struct CalibrationRecord {
  int qubit_id = 0;
  double t1_us = 0.0;
  double t2_us = 0.0;
  double frequency_ghz = 0.0;
  double temperature_mk = 15.0;
  double single_gate_time_ns = 0.0;
  double id_error = 0.0;
  double rz_error = 0.0;
  double sx_error = 0.0;
  double x_error = 0.0;
  std::optional<double> ecr_error;
  std::optional<double> two_qubit_gate_time_ns;

  void validate(int row_number) const;
};

/// CSV schema (exact header):
/// qubit,t1_us,t2_us,frequency_ghz,temperature_mk,gate_time_1q_ns,
/// id_error,rz_error,sx_error,x_error,ecr_error,gate_time_2q_ns
/// Dash or empty string marks an absent optional; an omitted temperature
/// defaults to 15 mK.
std::vector<CalibrationRecord> parse_calibration(const std::string& text);
std::string serialize_calibration(const std::vector<CalibrationRecord>& records);

ThermalParams build_thermal_params(const CalibrationRecord& rec, double gate_time_ns);

/// Flat scenario constants: per-gate depolarizing strengths and the
/// crosstalk interaction. The two-qubit epsilon is ten times the
/// single-qubit one.
struct ScenarioConstants {
  double eps_1q = 2.5e-4;
  double eps_2q = 2.5e-3;
  double zeta_hz = 1.5e5;
  double crosstalk_duration_s = 600e-9;
};
ScenarioConstants default_scenario_constants();

/// Calibration data for the simulated qubit pair (an IBM Brisbane-class
/// device, qubits 2 and 3); also shipped as data/ibm_brisbane.csv.
const std::string& bundled_calibration_csv();
const std::vector<CalibrationRecord>& bundled_calibration();

}  // namespace vqft

#endif  // VQFT_CALIBRATION_HPP
