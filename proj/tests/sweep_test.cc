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

#include "qrelax/sweep.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qrelax/errors.h"
#include "qrelax/figures.h"

namespace qrelax {
namespace {

SweepSpec telp_spec() {
  SweepSpec spec;
  spec.quantity = Quantity::kTelp;
  spec.t_max = 2.0;
  spec.steps = 21;
  return spec;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(RunCurve, UniformGridAndFirstRow) {
  const CurveTable t = run_curve(telp_spec(), "telp");
  ASSERT_EQ(t.rows.size(), 21u);
  EXPECT_EQ(t.rows.front().t, 0.0);
  EXPECT_EQ(t.rows.back().t, 2.0);
  EXPECT_NEAR(t.rows[10].t, 1.0, 1e-15);
  EXPECT_NEAR(t.rows.front().value, 3.0, 1e-12);
}

TEST(RunCurve, CpCheckIsBinary) {
  SweepSpec spec = telp_spec();
  spec.quantity = Quantity::kCpCheck;
  const CurveTable t = run_curve(spec);
  EXPECT_EQ(t.rows.front().value, 0.0);
  for (const CurveRow& r : t.rows) EXPECT_TRUE(r.value == 0.0 || r.value == 1.0);
}

TEST(ValidateSpec, UsageErrors) {
  SweepSpec spec = telp_spec();
  spec.t_max = 0.0;
  EXPECT_THROW(validate_spec(spec), UsageError);
  spec = telp_spec();
  spec.steps = 1;
  EXPECT_THROW(validate_spec(spec), UsageError);
  spec = telp_spec();
  spec.lambda1 = 1.0;
  EXPECT_THROW(validate_spec(spec), UsageError);
  spec.quantity = Quantity::kFidelity;
  EXPECT_NO_THROW(validate_spec(spec));
  spec.lambda1.reset();
  EXPECT_THROW(validate_spec(spec), UsageError);
  EXPECT_THROW(run_curve(spec), UsageError);
}

TEST(ParseQuantity, RoundTripsNames) {
  for (Quantity q : {Quantity::kPptPaper, Quantity::kPptOracle, Quantity::kDoe, Quantity::kTelp,
                     Quantity::kHorodecki, Quantity::kFidelity, Quantity::kCpCheck}) {
    EXPECT_EQ(parse_quantity(to_string(q)), q);
  }
  EXPECT_THROW(parse_quantity("negativity"), UsageError);
}

TEST(Csv, HeaderLayout) {
  const std::string csv = to_csv(run_curve(telp_spec(), "telp"));
  EXPECT_EQ(csv.rfind("#artifact_version=1.0.0\n", 0), 0u);
  EXPECT_NE(csv.find("\nt,value\n0,3\n"), std::string::npos);
  EXPECT_NE(csv.find("#time_unit=t in units of T2a\n"), std::string::npos);
  EXPECT_EQ(csv.back(), '\n');
}

TEST(Csv, DeterministicBytes) {
  EXPECT_EQ(to_csv(run_curve(telp_spec(), "a")), to_csv(run_curve(telp_spec(), "a")));
}

TEST(Csv, RoundTrip) {
  const CurveTable t = run_curve(telp_spec(), "telp");
  const CurveTable back = parse_csv(to_csv(t));
  EXPECT_EQ(back.spec, t.spec);
  EXPECT_EQ(back.label, "telp");
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    EXPECT_NEAR(back.rows[i].value, t.rows[i].value, 1e-11 * std::max(1.0, t.rows[i].value));
}

TEST(Json, RoundTripWithFidelityFields) {
  SweepSpec spec = telp_spec();
  spec.quantity = Quantity::kFidelity;
  spec.lambda1 = 0.6;
  spec.fidelity_variant = FidelityVariant::kProtocol;
  spec.mode = ChannelMode::kPaperLiteral;
  spec.cp = ChannelParams::from_ratios_fixed_t1(0.5, 2.0, 0.3, -1.0);
  const CurveTable t = run_curve(spec, "fid");
  const CurveTable back = parse_json(to_json(t));
  EXPECT_EQ(back.spec, spec);
  EXPECT_EQ(back.label, "fid");
  EXPECT_EQ(back.rows.size(), t.rows.size());
  EXPECT_EQ(time_unit_label(spec.cp), "t in units of T1a");
}

TEST(Json, MalformedInputIsInvalidInput) {
  EXPECT_THROW(parse_json("{\"rows\": []}"), InvalidInput);
  EXPECT_THROW(parse_json("not json"), InvalidInput);
  EXPECT_THROW(parse_csv("t,value\n0,1\n"), InvalidInput);
}

TEST(FormatSig12, Digits) {
  EXPECT_EQ(format_sig12(0.1 + 0.2), "0.3");
  EXPECT_EQ(format_sig12(-0.50367340014019), "-0.50367340014");
}

TEST(Figures, FirstRowAnchors) {
  for (const CurveTable& t : run_figure(1, std::nullopt, std::nullopt))
    EXPECT_NEAR(t.rows.front().value, -0.25, 1e-12) << t.label;
  for (const CurveTable& t : run_figure(8, std::nullopt, std::nullopt))
    EXPECT_NEAR(t.rows.front().value, 1.0, 1e-12) << t.label;
}

TEST(Figures, CurveCountsAndVariants) {
  EXPECT_EQ(figure_curves(1).size(), 5u);
  EXPECT_EQ(figure_curves(4).size(), 8u);
  EXPECT_EQ(figure_curves(4, "fixed-t1").size(), 4u);
  EXPECT_EQ(figure_curves(7).size(), 10u);
  EXPECT_EQ(figure_curves(7, "a").size(), 5u);
  EXPECT_EQ(figure_curves(8, "b").size(), 3u);
  EXPECT_THROW(figure_curves(9), UsageError);
  EXPECT_THROW(figure_curves(3, "c"), UsageError);
}

TEST(Figures, WritesOneFilePerCurve) {
  const auto dir = std::filesystem::temp_directory_path() / "qrelax_sweep_test";
  std::filesystem::remove_all(dir);
  const auto tables = run_figure(7, std::nullopt, dir, OutputFormat::kJson);
  for (const CurveTable& t : tables) {
    const auto path = dir / (t.label + ".json");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(parse_json(slurp(path)).rows.size(), static_cast<std::size_t>(kFigureSteps));
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qrelax
