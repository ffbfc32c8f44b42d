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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrelax/channel.h"
#include "qrelax/entanglement.h"
#include "qrelax/qstate.h"
#include "qrelax/teleport.h"

namespace qrelax {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum class Quantity { kPptPaper, kPptOracle, kDoe, kTelp, kHorodecki, kFidelity, kCpCheck };

const char* to_string(Quantity q);
// Throws UsageError for unknown names.
Quantity parse_quantity(const std::string& text);

struct SweepSpec {
  Quantity quantity = Quantity::kDoe;
  FamilyParam fp{0.0};
  ChannelParams cp = ChannelParams::from_ratios(2.5, 2.5, 1.0, -0.5);
  ChannelMode mode = ChannelMode::kPhysical;
  double t_max = 5.0;
  int steps = 501;
  // Only meaningful (and then required) for Quantity::kFidelity.
  std::optional<double> lambda1;
  FidelityVariant fidelity_variant = FidelityVariant::kPaperNormalized;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

// Throws UsageError on t_max <= 0, steps < 2, or lambda1 given for a
// quantity other than fidelity (or missing for fidelity).
void validate_spec(const SweepSpec& spec);

struct CurveTable {
  SweepSpec spec;
  std::string label;
  std::vector<CurveRow> rows;
};

// Uniform grid t_k = t_max·k/(steps-1); every row evaluated independently.
// cp-check rows hold 1 when both qubits pass and 0 otherwise.
CurveTable run_curve(const SweepSpec& spec, std::string label = "");

// Value of a single quantity at one instant.
double evaluate_quantity(const SweepSpec& spec, double t);

// Description of the time unit carried in every header.
std::string time_unit_label(const ChannelParams& cp);

// Header metadata. Keys are emitted in sorted order.
nlohmann::json curve_meta(const CurveTable& table);
SweepSpec spec_from_meta(const nlohmann::json& meta);

// `#key=value` metadata lines (sorted), then `t,value`, then rows with 12
// significant digits; '\n' line endings.
std::string to_csv(const CurveTable& table);
// {"meta": {...}, "rows": [[t, value], ...]} with 12 significant digits.
std::string to_json(const CurveTable& table);

// Parsers for the two formats above; the returned rows carry the rounded values.
CurveTable parse_csv(const std::string& text);
CurveTable parse_json(const std::string& text);

// %.12g
std::string format_sig12(double v);

}  // namespace qrelax
