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

#include "qrelax/validate.h"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qrelax/channel.h"
#include "qrelax/entanglement.h"
#include "qrelax/random_states.h"
#include "qrelax/sweep.h"
#include "qrelax/teleport.h"

namespace qrelax {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass_if(bool ok, const std::string& detail) {
  return {ok ? CheckStatus::kPass : CheckStatus::kFail, detail};
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string fix(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Figure-1 preset channel: t_eq = -0.5, alpha = 2.5, T2 = 1.
ChannelParams fig1_channel(double s_eq) {
  return ChannelParams::from_ratios(2.5, 2.5, s_eq, -0.5);
}

constexpr double kLifetimeHorizon = 10.0;

Outcome check_t0_identity() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1);
  std::vector<BlochState> states;
  for (int i = 0; i < 200; ++i) states.push_back(random_bloch_state(rng));
  std::vector<ChannelParams> params;
  for (int i = 0; i < 50; ++i) params.push_back(random_channel_params(rng));
  double worst = 0.0;
  for (const auto& s : states)
    for (const auto& cp : params)
      for (ChannelMode m : {ChannelMode::kPaperLiteral, ChannelMode::kPhysical})
        worst = std::max(worst, max_abs_diff(apply_channel(s, cp, 0.0, m), s));
  const double secs = seconds_since(start);
  return pass_if(worst < 1e-12 && secs < 1.0,
                 "max deviation " + sci(worst) + ", runtime " + fix(secs, 3) + " s");
}

Outcome check_mode_equivalence() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  double route_dev = 0.0;
  double zero_a1_dev = 0.0;
  bool confined = true;
  for (int i = 0; i < 1000; ++i) {
    BlochState s = random_bloch_state(rng);
    const ChannelParams cp = random_channel_params(rng);
    const double t = time(rng);
    const DensityMatrix via_bloch =
        bloch_to_density(apply_channel(s, cp, t, ChannelMode::kPhysical));
    const DensityMatrix via_matrix = apply_channel_density(bloch_to_density(s), cp, t);
    route_dev = std::max(route_dev, via_bloch.matrix().max_abs_diff(via_matrix.matrix()));

    for (const auto& d : compare_modes(s, cp, t).offending) {
      if (!(d.block == 'c' && d.row == 1 && d.col == 3)) confined = false;
    }
    s.a[0] = 0.0;
    zero_a1_dev = std::max(zero_a1_dev, compare_modes(s, cp, t).max_deviation);
  }
  return pass_if(route_dev < 1e-12 && zero_a1_dev == 0.0 && confined,
                 "Bloch vs matrix route " + sci(route_dev) + "; literal-vs-physical with a1=0: " +
                     sci(zero_a1_dev) + "; differences confined to c13: " +
                     (confined ? "yes" : "no"));
}

Outcome check_spectrum_oracle() {
  std::mt19937_64 rng(3);
  double worst = 0.0, worst_sum = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix m = random_x_state(rng);
    const PtSpectrum closed = pt_spectrum_x_state(m);
    const auto jacobi = hermitian_eigenvalues(partial_transpose(m).matrix());
    for (std::size_t k = 0; k < 4; ++k)
      worst = std::max(worst, std::abs(closed.lambdas[k] - jacobi[k]));
    worst_sum = std::max(worst_sum, std::abs(closed.sum() - 1.0));
  }
  return pass_if(worst < 1e-10 && worst_sum < 1e-10,
                 "closed form vs Jacobi " + sci(worst) + "; |sum-1| " + sci(worst_sum));
}

Outcome check_doe_anchors() {
  const std::pair<double, double> anchors[] = {{0.0, 1.0}, {0.6, 0.8}, {1.0, 0.0}};
  double worst = 0.0;
  std::string detail;
  for (const auto& [p, expected] : anchors) {
    const DensityMatrix m = bloch_to_density(generic_pure_state(FamilyParam(p)));
    const double value = doe(m);
    double brute = -1.0;
    for (double l : hermitian_eigenvalues(partial_transpose(m).matrix())) brute += std::abs(l);
    worst = std::max({worst, std::abs(value - expected), std::abs(brute - expected)});
    detail += "p=" + format_sig12(p) + ": " + fix(value, 12) + " (brute " + fix(brute, 12) + "); ";
  }
  return pass_if(worst < 1e-10, detail + "max error " + sci(worst));
}

Outcome check_ppt_anchors() {
  const DecayFactors t0{};
  const DecayFactors inf{0.0, 0.0, 0.0, 0.0};
  const double v0 = ppt_scalar_paper(FamilyParam(0.0), t0, 1.0, -0.5);
  const double v5 = ppt_scalar_paper(FamilyParam(0.5), t0, 1.0, -0.5);
  double worst_inf = 0.0;
  for (double p : {0.0, 0.5, 1.0})
    for (double s : {-1.0, -0.3, 0.5, 1.0})
      for (double te : {-1.0, -0.5, 0.2, 1.0})
        worst_inf = std::max(worst_inf, std::abs(ppt_scalar_paper(FamilyParam(p), inf, s, te)));
  const bool ok = std::abs(v0 + 0.25) < 1e-12 && std::abs(v5 + 0.1875) < 1e-12 &&
                  worst_inf < 1e-12;
  return pass_if(ok, "p=0: " + fix(v0, 12) + ", p=0.5: " + fix(v5, 12) +
                         ", max |limit| " + sci(worst_inf));
}

Outcome check_seq_monotone() {
  std::string detail;
  double prev = -1.0;
  bool ok = true;
  for (double s : {0.5, 0.7, 0.8, 0.9, 1.0}) {
    const auto t = entangled_time(FamilyParam(0.0), fig1_channel(s), kLifetimeHorizon);
    if (!t) return {CheckStatus::kFail, "still entangled at horizon for s_eq=" + format_sig12(s)};
    ok = ok && *t >= prev;
    prev = *t;
    detail += "s_eq=" + format_sig12(s) + ": " + fix(*t) + "; ";
  }
  return pass_if(ok, detail);
}

Outcome check_partial_outlives_maximal() {
  const auto t0 = entangled_time(FamilyParam(0.0), fig1_channel(1.0), kLifetimeHorizon);
  const auto t5 = entangled_time(FamilyParam(0.5), fig1_channel(1.0), kLifetimeHorizon);
  if (!t0) return {CheckStatus::kFail, "p=0 still entangled at horizon"};
  const bool ok = !t5 || *t5 > *t0;
  return pass_if(ok, "p=0: " + fix(*t0) + ", p=0.5: " + (t5 ? fix(*t5) : "beyond horizon"));
}

Outcome check_window_ordering() {
  const auto w0 = teleportation_window(FamilyParam(0.0), fig1_channel(1.0), kLifetimeHorizon);
  const auto w5 = teleportation_window(FamilyParam(0.5), fig1_channel(1.0), kLifetimeHorizon);
  return pass_if(w5.telp.end > w0.telp.end,
                 "Telp window p=0: [0," + fix(w0.telp.end) + "], p=0.5: [0," +
                     fix(w5.telp.end) + "]");
}

std::vector<CurveRow> doe_curve(const ChannelParams& cp, double horizon, int steps) {
  std::vector<CurveRow> rows;
  for (int k = 0; k < steps; ++k) {
    const double t = horizon * k / (steps - 1);
    rows.push_back({t, doe(evolved_family_density(FamilyParam(0.0), cp, t))});
  }
  return rows;
}

// Sudden death at alpha = 2.5 vs survival at alpha = 0.5 over the horizon
// [0, 2 t*(2.5)], with T1 held fixed across the alpha sweep.
struct SurvivalComparison {
  DecayVerdict fast;
  double horizon = 0.0;
  double slow_min = 0.0;
  bool ok() const {
    return fast.kind == DecayKind::kSuddenDeath && slow_min > kDeathThreshold;
  }
};

SurvivalComparison compare_survival(const ChannelParams& fast_cp, const ChannelParams& slow_cp) {
  SurvivalComparison r;
  const auto death = entangled_time(FamilyParam(0.0), fast_cp, kLifetimeHorizon);
  r.horizon = 2.0 * death.value_or(kLifetimeHorizon / 2.0);
  r.fast = classify_decay(doe_curve(fast_cp, r.horizon, 2001));
  const auto slow = doe_curve(slow_cp, r.horizon, 2001);
  r.slow_min = INFINITY;
  for (const auto& row : slow) r.slow_min = std::min(r.slow_min, row.value);
  return r;
}

Outcome check_sudden_death_vs_alpha() {
  const SurvivalComparison fixed_t1 =
      compare_survival(ChannelParams::from_ratios_fixed_t1(2.5, 2.5, 1.0, -0.5),
                       ChannelParams::from_ratios_fixed_t1(0.5, 0.5, 1.0, -0.5));
  const SurvivalComparison fixed_t2 =
      compare_survival(ChannelParams::from_ratios(2.5, 2.5, 1.0, -0.5),
                       ChannelParams::from_ratios(0.5, 0.5, 1.0, -0.5));
  auto describe = [](const SurvivalComparison& c) {
    return std::string("alpha=2.5 ") + to_string(c.fast.kind) +
           (c.fast.death_time ? " at " + fix(*c.fast.death_time) : "") + ", alpha=0.5 min DOE " +
           sci(c.slow_min) + " on [0," + fix(c.horizon) + "]";
  };
  return pass_if(fixed_t1.ok(), "T1 fixed: " + describe(fixed_t1) +
                                    " | for reference, T2 fixed: " + describe(fixed_t2));
}

Outcome check_teleport_anchors() {
  const InputQubit zero = InputQubit::from_real(1.0);
  const DensityMatrix bell = bloch_to_density(generic_pure_state(FamilyParam(0.0)));
  const double oracle = teleport_best_correction(zero, bell, BellState::kPhiPlus).outcome.fidelity;
  const double paper =
      fidelity_paper(zero, bob_coefficients_paper(zero, generic_pure_state(FamilyParam(0.0))));
  const InputQubit plus = InputQubit::from_real(1.0 / std::sqrt(2.0));
  const double mixed =
      teleport_protocol(plus, DensityMatrix::maximally_mixed(), BellState::kPsiPlus,
                        PauliCorrection::kX)
          .fidelity;
  std::mt19937_64 rng(7);
  double worst_prob = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix ch = random_density_matrix(rng);
    double total = 0.0;
    for (BellState b : kBellStates)
      total += teleport_protocol(plus, ch, b, PauliCorrection::kI).probability;
    worst_prob = std::max(worst_prob, std::abs(total - 1.0));
  }
  const bool ok = std::abs(oracle - 1.0) < 1e-12 && std::abs(paper - 1.0) < 1e-12 &&
                  std::abs(mixed - 0.5) < 1e-12 && worst_prob < 1e-10;
  return pass_if(ok, "protocol " + fix(oracle, 12) + ", closed form " + fix(paper, 12) +
                         ", mixed channel " + fix(mixed, 12) + ", max |sum P - 1| " +
                         sci(worst_prob));
}

Outcome check_criterion_anchors(json& table) {
  const double h = horodecki_measure(generic_pure_state(FamilyParam(0.0)));
  const double telp = telp_paper(FamilyParam(0.0), DecayFactors{}, 1.0, -0.5);
  table = json::array();
  const ChannelParams cp = fig1_channel(1.0);
  for (double t : {0.0, 0.1, 0.2, 0.3, 0.379, 0.5, 1.0, 2.0}) {
    const double hm =
        horodecki_measure(apply_channel(generic_pure_state(FamilyParam(0.0)), cp, t,
                                        ChannelMode::kPhysical));
    const double tp = telp_paper(FamilyParam(0.0), decay_factors(cp, t), cp.s_eq(), cp.t_eq());
    table.push_back({{"t", t}, {"horodecki", hm}, {"telp", tp}, {"horodecki_squared", hm * hm}});
  }
  return pass_if(std::abs(h - 3.0) < 1e-12 && std::abs(telp - 3.0) < 1e-12,
                 "horodecki(p=0) " + fix(h, 12) + ", telp(p=0,t=0) " + fix(telp, 12));
}

Outcome check_calibration(json& table) {
  const CalibrationResult c = calibrate_windows();
  table = {{"base_window_T2_units", c.base_window},
           {"calibrated_T2", c.scale},
           {"seq_0.5_window", c.seq_half},
           {"seq_0.5_target", 23.1},
           {"seq_0.5_rel_error", c.seq_half_rel_error},
           {"p_0.5_window", c.partial},
           {"p_0.5_target", 30.9},
           {"p_0.5_rel_error", c.partial_rel_error}};
  const std::string detail = "T2=" + fix(c.scale, 3) + "; s_eq=0.5 -> " + fix(c.seq_half, 2) +
                             " (target 23.1, " + fix(100 * c.seq_half_rel_error, 1) +
                             "%); p=0.5 -> " + fix(c.partial, 2) + " (target 30.9, " +
                             fix(100 * c.partial_rel_error, 1) + "%)";
  return {c.within_tolerance ? CheckStatus::kPass : CheckStatus::kWarn, detail};
}

Outcome check_cp_literal_at_t0() {
  bool all_fail = true;
  for (double s : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    if (cp_check(DecayFactors{}, s, s).qubit_a()) all_fail = false;
  }
  return pass_if(all_fail,
                 "literal CP inequalities fail at t=0 for every s_eq in (-1,1) "
                 "(expected-paper-literal; not a channel defect)");
}

Outcome check_positivity() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  double worst = INFINITY;
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = random_density_matrix(rng);
    const ChannelParams cp = random_channel_params(rng, 0.5, 3.0);
    const double t = time(rng);
    worst = std::min(worst, validate_state(apply_channel_density(rho, cp, t)).min_eigenvalue);
  }
  // Outside the safe range the diagnostics must flag, not throw.
  int flagged = 0;
  const ChannelParams non_cp = ChannelParams::from_ratios(0.25, 0.25, 1.0, -0.5);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density_matrix(rng);
    if (!validate_state(apply_channel_density(rho, non_cp, 0.5)).physical) ++flagged;
  }
  return pass_if(worst >= -1e-9, "min eigenvalue over alpha in [0.5,3]: " + sci(worst) +
                                     "; alpha=0.25 outputs flagged unphysical: " +
                                     std::to_string(flagged) + "/100");
}

Outcome check_semigroup() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> time(0.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const BlochState s = random_bloch_state(rng);
    const ChannelParams cp = random_channel_params(rng);
    const double t1 = time(rng), t2 = time(rng);
    const BlochState two_step = apply_channel(apply_channel(s, cp, t1, ChannelMode::kPhysical),
                                              cp, t2, ChannelMode::kPhysical);
    worst = std::max(worst, max_abs_diff(two_step,
                                         apply_channel(s, cp, t1 + t2, ChannelMode::kPhysical)));
  }
  return pass_if(worst < 1e-12, "max deviation " + sci(worst));
}

json ppt_divergence_table() {
  json out = json::array();
  for (double p : {0.0, 0.5}) {
    const ChannelParams cp = fig1_channel(1.0);
    for (double t : {0.0, 0.1, 0.2, 0.5, 0.8, 1.0, 2.0}) {
      const double paper = ppt_scalar_paper(FamilyParam(p), decay_factors(cp, t), cp.s_eq(),
                                            cp.t_eq());
      const DensityMatrix m = evolved_family_density(FamilyParam(p), cp, t);
      out.push_back({{"p", p},
                     {"t", t},
                     {"ppt_paper", paper},
                     {"ppt_oracle", ppt_scalar_oracle(m)},
                     {"min_pt_eigenvalue", pt_spectrum(m).min()}});
    }
  }
  return out;
}

json window_table() {
  json out = json::array();
  for (double p : {0.0, 0.5}) {
    for (double s : {1.0, 0.5}) {
      const auto w = teleportation_window(FamilyParam(p), fig1_channel(s), kLifetimeHorizon);
      out.push_back({{"p", p},
                     {"s_eq", s},
                     {"telp_window_end", w.telp.end},
                     {"horodecki_window_end", w.horodecki.end}});
    }
  }
  return out;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kWarn:
      return "WARN";
    case CheckStatus::kFail:
      break;
  }
  return "FAIL";
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::kFail) return false;
  return true;
}

json ValidationReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    list.push_back(
        {{"id", c.id}, {"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return {{"ok", ok()}, {"checks", list}, {"tables", tables}};
}

CalibrationResult calibrate_windows() {
  CalibrationResult c;
  auto window = [](double p, double s) {
    return teleportation_window(FamilyParam(p), fig1_channel(s), kLifetimeHorizon).telp.end;
  };
  c.base_window = window(0.0, 1.0);
  c.scale = 25.2 / c.base_window;
  c.seq_half = c.scale * window(0.0, 0.5);
  c.partial = c.scale * window(0.5, 1.0);
  c.seq_half_rel_error = (c.seq_half - 23.1) / 23.1;
  c.partial_rel_error = (c.partial - 30.9) / 30.9;
  c.within_tolerance =
      std::abs(c.seq_half_rel_error) <= 0.10 && std::abs(c.partial_rel_error) <= 0.10;
  return c;
}

ValidationReport run_validate() {
  ValidationReport report;
  auto run = [&](std::string id, std::string name, const std::function<Outcome()>& fn) {
    CheckResult r{std::move(id), std::move(name), CheckStatus::kFail, ""};
    try {
      const Outcome o = fn();
      r.status = o.status;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(r));
  };

  json horodecki_vs_telp, calibration;
  run("c1", "t=0 identity, both modes", check_t0_identity);
  run("c2", "mode equivalence", check_mode_equivalence);
  run("c3", "PT spectrum closed form vs Jacobi", check_spectrum_oracle);
  run("c4", "input-state DOE anchors", check_doe_anchors);
  run("c5", "PPT scalar anchors", check_ppt_anchors);
  const auto start6 = Clock::now();
  run("c6a", "entangled time non-decreasing in s_eq", check_seq_monotone);
  run("c6b", "partially entangled input outlives maximal", check_partial_outlives_maximal);
  run("c6c", "teleportation window longer for p=0.5", check_window_ordering);
  run("c6d", "sudden death at alpha=2.5, survival at alpha=0.5", check_sudden_death_vs_alpha);
  const double secs6 = seconds_since(start6);
  run("c6t", "ordering checks runtime < 10 s",
      [&] { return pass_if(secs6 < 10.0, fix(secs6, 3) + " s"); });
  run("c7", "teleportation anchors", check_teleport_anchors);
  run("c8", "criterion anchors", [&] { return check_criterion_anchors(horodecki_vs_telp); });
  run("c9", "window calibration (report-only)", [&] { return check_calibration(calibration); });
  run("x1", "CP inequalities at t=0", check_cp_literal_at_t0);
  run("x2", "positivity for alpha >= 0.5", check_positivity);
  run("x3", "semigroup property", check_semigroup);

  report.tables["horodecki_vs_telp"] = horodecki_vs_telp;
  report.tables["calibration"] = calibration;
  try {
    report.tables["ppt_paper_vs_oracle"] = ppt_divergence_table();
    report.tables["teleportation_windows"] = window_table();
  } catch (const std::exception& e) {
    report.checks.push_back({"tables", "divergence tables", CheckStatus::kFail, e.what()});
  }
  return report;
}

}  // namespace qrelax
