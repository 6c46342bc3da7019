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

#include "vqft/calibration.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "vqft/errors.hpp"

namespace vqft {

namespace {

const char* kHeader =
    "qubit,t1_us,t2_us,frequency_ghz,temperature_mk,gate_time_1q_ns,"
    "id_error,rz_error,sx_error,x_error,ecr_error,gate_time_2q_ns";

const char* kBundledCsv =
    "qubit,t1_us,t2_us,frequency_ghz,temperature_mk,gate_time_1q_ns,"
    "id_error,rz_error,sx_error,x_error,ecr_error,gate_time_2q_ns\n"
    "2,316.85,311.90,4.61,15,60,0.0002045,0,0.0002045,0.0002045,-,-\n"
    "3,315.50,409.37,4.86,15,60,0.0005032,0,0.0005032,0.0005032,0.008892,660\n";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

bool is_absent(const std::string& s) { return s.empty() || s == "-"; }

double parse_number(const std::string& s, int row, const char* field) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("calibration row " + std::to_string(row) + ": bad value for field '" +
                      field + "': '" + s + "'");
  }
}

void check_error_rate(double v, int row, const char* field) {
  if (v < 0.0 || v > 1.0) {
    throw ConfigError("calibration row " + std::to_string(row) + ": field '" + field +
                      "' must be a probability in [0,1]");
  }
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void CalibrationRecord::validate(int row_number) const {
  auto fail = [&](const char* field, const char* why) {
    throw ConfigError("calibration row " + std::to_string(row_number) + ": field '" + field +
                      "' " + why);
  };
  if (!(t1_us > 0.0)) fail("t1_us", "must be positive");
  if (!(t2_us > 0.0)) fail("t2_us", "must be positive");
  if (t2_us > 2.0 * t1_us) fail("t2_us", "violates T2 <= 2*T1");
  if (!(frequency_ghz > 0.0)) fail("frequency_ghz", "must be positive");
  if (!(temperature_mk > 0.0)) fail("temperature_mk", "must be positive");
  if (single_gate_time_ns < 0.0) fail("gate_time_1q_ns", "must be >= 0");
  check_error_rate(id_error, row_number, "id_error");
  check_error_rate(rz_error, row_number, "rz_error");
  check_error_rate(sx_error, row_number, "sx_error");
  check_error_rate(x_error, row_number, "x_error");
  if (ecr_error) check_error_rate(*ecr_error, row_number, "ecr_error");
  if (two_qubit_gate_time_ns && *two_qubit_gate_time_ns < 0.0) {
    fail("gate_time_2q_ns", "must be >= 0");
  }
}

std::vector<CalibrationRecord> parse_calibration(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("calibration: empty input");
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  if (line != kHeader) {
    throw ConfigError("calibration: header does not match the expected schema");
  }

  std::vector<CalibrationRecord> records;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() != 12) {
      throw ConfigError("calibration row " + std::to_string(row) + ": expected 12 fields, got " +
                        std::to_string(f.size()));
    }
    CalibrationRecord r;
    r.qubit_id = static_cast<int>(parse_number(f[0], row, "qubit"));
    r.t1_us = parse_number(f[1], row, "t1_us");
    r.t2_us = parse_number(f[2], row, "t2_us");
    r.frequency_ghz = parse_number(f[3], row, "frequency_ghz");
    r.temperature_mk = is_absent(f[4]) ? 15.0 : parse_number(f[4], row, "temperature_mk");
    r.single_gate_time_ns = parse_number(f[5], row, "gate_time_1q_ns");
    r.id_error = parse_number(f[6], row, "id_error");
    r.rz_error = parse_number(f[7], row, "rz_error");
    r.sx_error = parse_number(f[8], row, "sx_error");
    r.x_error = parse_number(f[9], row, "x_error");
    if (!is_absent(f[10])) r.ecr_error = parse_number(f[10], row, "ecr_error");
    if (!is_absent(f[11])) r.two_qubit_gate_time_ns = parse_number(f[11], row, "gate_time_2q_ns");
    r.validate(row);
    records.push_back(r);
  }
  if (records.empty()) throw ConfigError("calibration: no data rows");
  return records;
}

std::string serialize_calibration(const std::vector<CalibrationRecord>& records) {
  std::ostringstream out;
  out << kHeader << "\n";
  for (const CalibrationRecord& r : records) {
    out << r.qubit_id << ',' << format_number(r.t1_us) << ',' << format_number(r.t2_us) << ','
        << format_number(r.frequency_ghz) << ',' << format_number(r.temperature_mk) << ','
        << format_number(r.single_gate_time_ns) << ',' << format_number(r.id_error) << ','
        << format_number(r.rz_error) << ',' << format_number(r.sx_error) << ','
        << format_number(r.x_error) << ','
        << (r.ecr_error ? format_number(*r.ecr_error) : "-") << ','
        << (r.two_qubit_gate_time_ns ? format_number(*r.two_qubit_gate_time_ns) : "-") << "\n";
  }
  return out.str();
}

ThermalParams build_thermal_params(const CalibrationRecord& rec, double gate_time_ns) {
  ThermalParams p;
  p.t1_s = rec.t1_us * 1e-6;
  p.t2_s = rec.t2_us * 1e-6;
  p.gate_time_s = gate_time_ns * 1e-9;
  p.p_excited = excited_population(rec.frequency_ghz * 1e9, rec.temperature_mk);
  p.validate();
  return p;
}

ScenarioConstants default_scenario_constants() { return ScenarioConstants{}; }

const std::string& bundled_calibration_csv() {
  static const std::string csv = kBundledCsv;
  return csv;
}

const std::vector<CalibrationRecord>& bundled_calibration() {
  static const std::vector<CalibrationRecord> recs = parse_calibration(bundled_calibration_csv());
  return recs;
}

}  // namespace vqft
