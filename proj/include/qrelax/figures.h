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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qrelax/sweep.h"

namespace qrelax {

// One plotted curve of a figure preset.
struct FigureCurve {
  std::string stem;     // output file stem, e.g. "fig1_seq0.9"
  std::string variant;  // "" when the figure has a single parameter set
  SweepSpec spec;
};

inline constexpr int kFigureCount = 8;
inline constexpr double kFigureTmax = 5.0;
inline constexpr int kFigureSteps = 1001;

// Parameter grids of figures 1..8. Figures with conflicting or
// convention-dependent parameters carry named variants:
//   3, 6: "caption" (t_eq = 1, alpha = 2.5) and "body" (t_eq = -0.5, alpha = 0.5)
//   4:    "fixed-t1" (T1 = 1, T2 = T1/alpha) and "fixed-t2" (T2 = 1, T1 = alpha·T2)
//   7, 8: "a" (p = 0) and "b" (p = 0.5)
// `variant` filters to one of them. Throws UsageError for an unknown id or
// variant.
std::vector<FigureCurve> figure_curves(int id, const std::optional<std::string>& variant = {});

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(const std::string& text);
const char* extension(OutputFormat f);

// Computes every curve of the figure. When out_dir is set, writes one file per
// curve named <stem>.<csv|json>.
std::vector<CurveTable> run_figure(int id, const std::optional<std::string>& variant,
                                   const std::optional<std::filesystem::path>& out_dir,
                                   OutputFormat format = OutputFormat::kCsv);

void write_table(const CurveTable& table, const std::filesystem::path& path,
                 OutputFormat format);

}  // namespace qrelax
