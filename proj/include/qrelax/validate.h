// Copyright 2026 The qrelax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qrelax {

enum class CheckStatus { kPass, kWarn, kFail };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string id;  // e.g. "c6d"
  std::string name;
  CheckStatus status = CheckStatus::kFail;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  // Side-by-side tables: PPT closed form vs oracle, Telp vs Horodecki,
  // teleportation windows, window calibration.
  nlohmann::json tables = nlohmann::json::object();

  // No check failed (warnings allowed).
  bool ok() const;
  nlohmann::json to_json() const;
};

// Runs the full invariant suite. Never throws for a failed check; an
// exception inside a check is recorded as a failure of that check.
ValidationReport run_validate();

// Parameters of the window-calibration check.
struct CalibrationResult {
  double base_window = 0.0;  // p = 0, s_eq = 1 window with T2 = 1
  double scale = 0.0;        // T2 mapping base_window onto 25.2
  double seq_half = 0.0;     // calibrated s_eq = 0.5 endpoint (target 23.1)
  double partial = 0.0;      // calibrated p = 0.5 endpoint (target 30.9)
  double seq_half_rel_error = 0.0;
  double partial_rel_error = 0.0;
  bool within_tolerance = false;  // both within ±10%
};

CalibrationResult calibrate_windows();

}  // namespace qrelax
