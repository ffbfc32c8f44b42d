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

#include "qrelax/figures.h"

#include <fstream>

#include "qrelax/errors.h"

namespace qrelax {

namespace {

constexpr double kEquilibriumGrid[] = {1.0, 0.9, 0.8, 0.7, 0.5};
constexpr double kFidelityGrid[] = {1.0, 0.8, 0.5};
constexpr double kAlphaGrid[] = {2.5, 0.5, 0.33, 0.25};

std::string num(double v) { return format_sig12(v); }

SweepSpec base(Quantity q, double p, ChannelParams cp) {
  SweepSpec s;
  s.quantity = q;
  s.fp = FamilyParam(p);
  s.cp = cp;
  s.t_max = kFigureTmax;
  s.steps = kFigureSteps;
  return s;
}

// s_eq sweep at fixed t_eq and alpha with T2 = 1.
void add_seq_sweep(std::vector<FigureCurve>& out, const std::string& prefix,
                   const std::string& variant, Quantity q, double p, double t_eq,
                   double alpha) {
  for (double s : kEquilibriumGrid) {
    out.push_back({prefix + "_seq" + num(s), variant,
                   base(q, p, ChannelParams::from_ratios(alpha, alpha, s, t_eq))});
  }
}

void add_dual_variant(std::vector<FigureCurve>& out, int id, double p) {
  const std::string prefix = "fig" + std::to_string(id);
  add_seq_sweep(out, prefix + "_caption", "caption", Quantity::kDoe, p, 1.0, 2.5);
  add_seq_sweep(out, prefix + "_body", "body", Quantity::kDoe, p, -0.5, 0.5);
}

}  // namespace

std::vector<FigureCurve> figure_curves(int id, const std::optional<std::string>& variant) {
  std::vector<FigureCurve> all;
  switch (id) {
    case 1:
      add_seq_sweep(all, "fig1", "", Quantity::kPptPaper, 0.0, -0.5, 2.5);
      break;
    case 2:
      add_seq_sweep(all, "fig2", "", Quantity::kPptPaper, 0.0, 1.0, 2.5);
      break;
    case 3:
      add_dual_variant(all, 3, 0.0);
      break;
    case 4:
      for (double a : kAlphaGrid) {
        all.push_back({"fig4_fixed-t1_alpha" + num(a), "fixed-t1",
                       base(Quantity::kDoe, 0.0,
                            ChannelParams::from_ratios_fixed_t1(a, a, 1.0, -0.5))});
      }
      for (double a : kAlphaGrid) {
        all.push_back({"fig4_fixed-t2_alpha" + num(a), "fixed-t2",
                       base(Quantity::kDoe, 0.0, ChannelParams::from_ratios(a, a, 1.0, -0.5))});
      }
      break;
    case 5:
      add_seq_sweep(all, "fig5", "", Quantity::kPptPaper, 0.5, -0.5, 2.5);
      break;
    case 6:
      add_dual_variant(all, 6, 0.5);
      break;
    case 7:
      add_seq_sweep(all, "fig7a", "a", Quantity::kTelp, 0.0, -0.5, 2.5);
      add_seq_sweep(all, "fig7b", "b", Quantity::kTelp, 0.5, -0.5, 2.5);
      break;
    case 8:
      for (const auto& [sub, p] : {std::pair{"a", 0.0}, std::pair{"b", 0.5}}) {
        for (double s : kFidelityGrid) {
          SweepSpec spec =
              base(Quantity::kFidelity, p, ChannelParams::from_ratios(0.5, 0.5, s, -1.0));
          spec.lambda1 = 1.0;
          all.push_back({std::string("fig8") + sub + "_seq" + num(s), sub, spec});
        }
      }
      break;
    default:
      throw UsageError("figure id must be 1..8, got " + std::to_string(id));
  }
  if (!variant) return all;
  std::vector<FigureCurve> picked;
  for (auto& c : all)
    if (c.variant == *variant) picked.push_back(std::move(c));
  if (picked.empty()) {
    throw UsageError("figure " + std::to_string(id) + " has no variant '" + *variant + "'");
  }
  return picked;
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw UsageError("unknown format '" + text + "'");
}

const char* extension(OutputFormat f) { return f == OutputFormat::kCsv ? "csv" : "json"; }

void write_table(const CurveTable& table, const std::filesystem::path& path,
                 OutputFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot open " + path.string() + " for writing");
  out << (format == OutputFormat::kCsv ? to_csv(table) : to_json(table));
}

std::vector<CurveTable> run_figure(int id, const std::optional<std::string>& variant,
                                   const std::optional<std::filesystem::path>& out_dir,
                                   OutputFormat format) {
  std::vector<CurveTable> tables;
  for (const auto& curve : figure_curves(id, variant)) {
    tables.push_back(run_curve(curve.spec, curve.stem));
  }
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    for (const auto& t : tables) {
      write_table(t, *out_dir / (t.label + "." + extension(format)), format);
    }
  }
  return tables;
}

}  // namespace qrelax
