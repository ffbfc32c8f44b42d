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

// qrelax: two-qubit relaxation, entanglement and teleportation curves.
//
//   qrelax state    --p 0.5
//   qrelax evolve   --p 0 --seq 1 --teq -0.5 --alpha-a 2.5 --alpha-b 2.5 --t 0.3
//   qrelax curve    --quantity doe --p 0 --tmax 5 --steps 501 --format csv
//   qrelax window   --p 0.5 --seq 1 --teq -0.5
//   qrelax figure   --id 4 --out figures/
//   qrelax validate --out report.json
//
// Exit codes: 0 success, 1 usage error, 2 validation failure, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrelax/channel.h"
#include "qrelax/entanglement.h"
#include "qrelax/errors.h"
#include "qrelax/figures.h"
#include "qrelax/sweep.h"
#include "qrelax/teleport.h"
#include "qrelax/validate.h"

namespace {

using nlohmann::json;
using namespace qrelax;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Options {
  double p = 0.0;
  double s_eq = 1.0;
  double t_eq = -0.5;
  double alpha_a = 2.5;
  double alpha_b = 2.5;
  double t2a = 1.0;
  double t2b = 1.0;
  double t_max = 5.0;
  int steps = 501;
  std::optional<double> lambda1;
  std::string mode = "physical";
  std::string quantity = "doe";
  std::string fidelity = "normalized";
  std::string format = "csv";
  std::string out;
  double t = 0.0;
  int figure_id = 1;
  std::optional<std::string> variant;
};

void add_state_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "family parameter p in [0,1] (0 = singlet)");
}

void add_channel_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seq", o.s_eq, "equilibrium <sigma3> of qubit a");
  cmd->add_option("--teq", o.t_eq, "equilibrium <tau3> of qubit b");
  cmd->add_option("--alpha-a", o.alpha_a, "T1a/T2a");
  cmd->add_option("--alpha-b", o.alpha_b, "T1b/T2b");
  cmd->add_option("--t2a", o.t2a, "transverse time of qubit a");
  cmd->add_option("--t2b", o.t2b, "transverse time of qubit b");
  cmd->add_option("--mode", o.mode, "channel update: physical | paper-literal");
}

ChannelParams channel_from(const Options& o) {
  return ChannelParams::from_ratios(o.alpha_a, o.alpha_b, o.s_eq, o.t_eq, o.t2a, o.t2b);
}

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json bloch_json(const BlochState& s) {
  json c = json::array();
  for (const auto& row : s.c) c.push_back(vec_json(row));
  return {{"a", vec_json(s.a)}, {"b", vec_json(s.b)}, {"c", c}};
}

json matrix_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ii = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return {{"re", re}, {"im", im}};
}

json state_summary(const BlochState& s) {
  const DensityMatrix m = bloch_to_density(s);
  const StateDiagnostics d = validate_state(m);
  const PtSpectrum pt = pt_spectrum(m);
  json out = {{"bloch", bloch_json(s)},
              {"density", matrix_json(m.matrix())},
              {"diagnostics",
               {{"min_eigenvalue", d.min_eigenvalue},
                {"trace_deviation", d.trace_deviation},
                {"hermiticity_deviation", d.hermiticity_deviation},
                {"physical", d.physical}}},
              {"pt_spectrum", pt.lambdas},
              {"doe", doe(m)},
              {"horodecki", horodecki_measure(s)}};
  if (is_x_state(m)) {
    out["ppt_oracle"] = ppt_scalar_oracle(m);
    out["concurrence"] = concurrence(m);
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open " + path);
  f << text;
}

int cmd_state(const Options& o) {
  emit(state_summary(generic_pure_state(FamilyParam(o.p))).dump(2) + "\n", o.out);
  return 0;
}

int cmd_evolve(const Options& o) {
  const FamilyParam fp(o.p);
  const ChannelParams cp = channel_from(o);
  const ChannelMode mode = parse_channel_mode(o.mode);
  const DecayFactors df = decay_factors(cp, o.t);
  const BlochState evolved = apply_channel(generic_pure_state(fp), cp, o.t, mode);
  json out = state_summary(evolved);
  const CpCheck cpc = cp_check(df, cp.s_eq(), cp.t_eq());
  out["t"] = o.t;
  out["mode"] = to_string(mode);
  out["time_unit"] = time_unit_label(cp);
  out["decay_factors"] = {
      {"gamma1", df.gamma1}, {"beta1", df.beta1}, {"gamma2", df.gamma2}, {"beta2", df.beta2}};
  out["ppt_paper"] = ppt_scalar_paper(fp, df, cp.s_eq(), cp.t_eq());
  out["telp"] = telp_paper(fp, df, cp.s_eq(), cp.t_eq());
  out["cp_check"] = {{"qubit_a", cpc.qubit_a()}, {"qubit_b", cpc.qubit_b()}};
  emit(out.dump(2) + "\n", o.out);
  return 0;
}

int cmd_curve(const Options& o) {
  SweepSpec spec;
  spec.quantity = parse_quantity(o.quantity);
  spec.fp = FamilyParam(o.p);
  spec.cp = channel_from(o);
  spec.mode = parse_channel_mode(o.mode);
  spec.t_max = o.t_max;
  spec.steps = o.steps;
  spec.lambda1 = o.lambda1;
  spec.fidelity_variant = parse_fidelity_variant(o.fidelity);
  const OutputFormat fmt = parse_output_format(o.format);
  const CurveTable table = run_curve(spec, to_string(spec.quantity));
  emit(fmt == OutputFormat::kCsv ? to_csv(table) : to_json(table), o.out);
  return 0;
}

int cmd_window(const Options& o) {
  const FamilyParam fp(o.p);
  const ChannelParams cp = channel_from(o);
  if (!(o.t_max > 0.0)) throw UsageError("--tmax must be > 0");
  const auto life = entangled_time(fp, cp, o.t_max);
  const TeleportWindows w = teleportation_window(fp, cp, o.t_max);
  auto window_json = [](const TimeWindow& tw) {
    return json{{"start", 0.0}, {"end", tw.end}, {"bounded", tw.bounded}};
  };
  json out = {{"p", fp.p()},
              {"time_unit", time_unit_label(cp)},
              {"t_max", o.t_max},
              {"entangled_time", life ? json(*life) : json(nullptr)},
              {"telp_window", window_json(w.telp)},
              {"horodecki_window", window_json(w.horodecki)}};
  emit(out.dump(2) + "\n", o.out);
  return 0;
}

int cmd_figure(const Options& o) {
  const OutputFormat fmt = parse_output_format(o.format);
  const std::filesystem::path dir = o.out.empty() ? "figures" : o.out;
  const auto tables = run_figure(o.figure_id, o.variant, dir, fmt);
  for (const auto& t : tables) {
    std::cout << (dir / (t.label + "." + extension(fmt))).string();
    if (t.spec.quantity == Quantity::kDoe) {
      std::cout << "  [" << to_string(classify_decay(t.rows).kind) << "]";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_validate(const Options& o) {
  const ValidationReport report = run_validate();
  for (const auto& c : report.checks) {
    std::cout << to_string(c.status) << "  " << c.id << "  " << c.name << ": " << c.detail
              << "\n";
  }
  if (!o.out.empty()) emit(report.to_json().dump(2) + "\n", o.out);
  return report.ok() ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit Bloch-channel relaxation: entanglement and teleportation curves"};
  app.require_subcommand(1);
  Options o;

  auto* state = app.add_subcommand("state", "print the pure-family input state");
  add_state_flags(state, o);
  state->add_option("--out", o.out, "output file (default stdout)");

  auto* evolve = app.add_subcommand("evolve", "evolve the family state to time t");
  add_state_flags(evolve, o);
  add_channel_flags(evolve, o);
  evolve->add_option("--t", o.t, "evolution time")->check(CLI::NonNegativeNumber);
  evolve->add_option("--out", o.out, "output file (default stdout)");

  auto* curve = app.add_subcommand("curve", "tabulate one quantity over [0, tmax]");
  add_state_flags(curve, o);
  add_channel_flags(curve, o);
  curve->add_option("--quantity", o.quantity,
                    "ppt-paper | ppt-oracle | doe | telp | horodecki | fidelity | cp-check");
  curve->add_option("--tmax", o.t_max, "time horizon");
  curve->add_option("--steps", o.steps, "number of samples (>= 2)");
  curve->add_option("--lambda1", o.lambda1, "input amplitude lambda1 (fidelity only)");
  curve->add_option("--fidelity", o.fidelity, "paper | normalized | protocol");
  curve->add_option("--format", o.format, "csv | json");
  curve->add_option("--out", o.out, "output file (default stdout)");

  auto* window = app.add_subcommand("window", "entangled time and teleportation windows");
  add_state_flags(window, o);
  add_channel_flags(window, o);
  window->add_option("--tmax", o.t_max, "search horizon");
  window->add_option("--out", o.out, "output file (default stdout)");

  auto* figure = app.add_subcommand("figure", "write the curves of a figure preset");
  figure->add_option("--id", o.figure_id, "figure 1..8")->required();
  figure->add_option("--variant", o.variant, "restrict to one parameter variant");
  figure->add_option("--format", o.format, "csv | json");
  figure->add_option("--out", o.out, "output directory (default ./figures)");

  auto* validate = app.add_subcommand("validate", "run the invariant and acceptance suite");
  validate->add_option("--out", o.out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*state) return cmd_state(o);
    if (*evolve) return cmd_evolve(o);
    if (*curve) return cmd_curve(o);
    if (*window) return cmd_window(o);
    if (*figure) return cmd_figure(o);
    if (*validate) return cmd_validate(o);
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
