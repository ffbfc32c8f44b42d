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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "qrelax/errors.h"

namespace qrelax {

namespace {

using nlohmann::json;

struct QuantityName {
  Quantity q;
  const char* name;
};

constexpr QuantityName kQuantityNames[] = {
    {Quantity::kPptPaper, "ppt-paper"}, {Quantity::kPptOracle, "ppt-oracle"},
    {Quantity::kDoe, "doe"},            {Quantity::kTelp, "telp"},
    {Quantity::kHorodecki, "horodecki"}, {Quantity::kFidelity, "fidelity"},
    {Quantity::kCpCheck, "cp-check"},
};

const std::set<std::string> kNumericMetaKeys = {"lambda1", "p",   "s_eq", "steps", "t1a",
                                                "t1b",     "t2a", "t2b",  "t_eq",  "t_max"};

double round_sig12(double v) { return std::strtod(format_sig12(v).c_str(), nullptr); }

}  // namespace

const char* to_string(Quantity q) {
  for (const auto& qn : kQuantityNames)
    if (qn.q == q) return qn.name;
  return "unknown";
}

Quantity parse_quantity(const std::string& text) {
  for (const auto& qn : kQuantityNames)
    if (text == qn.name) return qn.q;
  throw UsageError("unknown quantity '" + text + "'");
}

void validate_spec(const SweepSpec& spec) {
  if (!(spec.t_max > 0.0) || !std::isfinite(spec.t_max)) {
    throw UsageError("t_max must be finite and > 0");
  }
  if (spec.steps < 2) throw UsageError("steps must be >= 2");
  const bool fidelity = spec.quantity == Quantity::kFidelity;
  if (fidelity && !spec.lambda1) throw UsageError("quantity=fidelity requires lambda1");
  if (!fidelity && spec.lambda1) {
    throw UsageError(std::string("lambda1 is only valid with quantity=fidelity, not ") +
                     to_string(spec.quantity));
  }
  if (fidelity && !(std::abs(*spec.lambda1) <= 1.0)) {
    throw UsageError("lambda1 must lie in [-1,1]");
  }
}

double evaluate_quantity(const SweepSpec& spec, double t) {
  const ChannelParams& cp = spec.cp;
  switch (spec.quantity) {
    case Quantity::kPptPaper:
      return ppt_scalar_paper(spec.fp, decay_factors(cp, t), cp.s_eq(), cp.t_eq());
    case Quantity::kPptOracle:
      return ppt_scalar_oracle(evolved_family_density(spec.fp, cp, t, spec.mode));
    case Quantity::kDoe:
      return doe(evolved_family_density(spec.fp, cp, t, spec.mode));
    case Quantity::kTelp:
      return telp_paper(spec.fp, decay_factors(cp, t), cp.s_eq(), cp.t_eq());
    case Quantity::kHorodecki:
      return horodecki_measure(apply_channel(generic_pure_state(spec.fp), cp, t, spec.mode));
    case Quantity::kFidelity:
      return family_fidelity(InputQubit::from_real(spec.lambda1.value_or(1.0)), spec.fp, cp,
                             t, spec.fidelity_variant, spec.mode);
    case Quantity::kCpCheck:
      return cp_check(decay_factors(cp, t), cp.s_eq(), cp.t_eq()).both() ? 1.0 : 0.0;
  }
  throw UsageError("unhandled quantity");
}

CurveTable run_curve(const SweepSpec& spec, std::string label) {
  validate_spec(spec);
  CurveTable table{spec, std::move(label), {}};
  table.rows.reserve(static_cast<std::size_t>(spec.steps));
  for (int k = 0; k < spec.steps; ++k) {
    const double t = k == spec.steps - 1 ? spec.t_max : spec.t_max * k / (spec.steps - 1);
    table.rows.push_back({t, evaluate_quantity(spec, t)});
  }
  return table;
}

std::string time_unit_label(const ChannelParams& cp) {
  if (cp.t2a() == 1.0) return "t in units of T2a";
  if (cp.t1a() == 1.0) return "t in units of T1a";
  return "t in the units of t1a/t2a/t1b/t2b";
}

std::string format_sig12(double v) {
  if (v == 0.0) v = 0.0;  // fold -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json curve_meta(const CurveTable& table) {
  const SweepSpec& s = table.spec;
  json meta = json::object();
  meta["artifact_version"] = kArtifactVersion;
  meta["label"] = table.label;
  meta["quantity"] = to_string(s.quantity);
  meta["p"] = s.fp.p();
  meta["t1a"] = s.cp.t1a();
  meta["t2a"] = s.cp.t2a();
  meta["t1b"] = s.cp.t1b();
  meta["t2b"] = s.cp.t2b();
  meta["s_eq"] = s.cp.s_eq();
  meta["t_eq"] = s.cp.t_eq();
  meta["mode"] = to_string(s.mode);
  meta["t_max"] = s.t_max;
  meta["steps"] = s.steps;
  meta["time_unit"] = time_unit_label(s.cp);
  if (s.lambda1) meta["lambda1"] = *s.lambda1;
  if (s.quantity == Quantity::kFidelity) {
    meta["fidelity_variant"] = to_string(s.fidelity_variant);
  }
  return meta;
}

SweepSpec spec_from_meta(const json& meta) {
  try {
    SweepSpec s;
    s.quantity = parse_quantity(meta.at("quantity").get<std::string>());
    s.fp = FamilyParam(meta.at("p").get<double>());
    s.cp = ChannelParams(meta.at("t1a").get<double>(), meta.at("t2a").get<double>(),
                         meta.at("t1b").get<double>(), meta.at("t2b").get<double>(),
                         meta.at("s_eq").get<double>(), meta.at("t_eq").get<double>());
    s.mode = parse_channel_mode(meta.at("mode").get<std::string>());
    s.t_max = meta.at("t_max").get<double>();
    s.steps = meta.at("steps").get<int>();
    if (meta.contains("lambda1")) s.lambda1 = meta.at("lambda1").get<double>();
    if (meta.contains("fidelity_variant")) {
      s.fidelity_variant = parse_fidelity_variant(meta.at("fidelity_variant").get<std::string>());
    }
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed curve metadata: ") + e.what());
  }
}

std::string to_csv(const CurveTable& table) {
  std::string out;
  const json meta = curve_meta(table);
  for (const auto& [key, value] : meta.items()) {
    out += "#" + key + "=";
    out += value.is_string() ? value.get<std::string>() : value.dump();
    out += '\n';
  }
  out += "t,value\n";
  for (const auto& row : table.rows) {
    out += format_sig12(row.t) + "," + format_sig12(row.value) + "\n";
  }
  return out;
}

std::string to_json(const CurveTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back(json::array({round_sig12(row.t), round_sig12(row.value)}));
  }
  json doc = json::object();
  doc["meta"] = curve_meta(table);
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

CurveTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  json meta = json::object();
  bool header_seen = false;
  CurveTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw InvalidInput("bad metadata line: " + line);
      const std::string key = line.substr(1, eq - 1);
      const std::string value = line.substr(eq + 1);
      if (kNumericMetaKeys.count(key)) {
        meta[key] = json::parse(value);
      } else {
        meta[key] = value;
      }
      continue;
    }
    if (!header_seen) {
      if (line != "t,value") throw InvalidInput("expected 't,value' header");
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidInput("bad data row: " + line);
    table.rows.push_back({std::strtod(line.substr(0, comma).c_str(), nullptr),
                          std::strtod(line.substr(comma + 1).c_str(), nullptr)});
  }
  table.spec = spec_from_meta(meta);
  table.label = meta.value("label", "");
  return table;
}

CurveTable parse_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    CurveTable table;
    table.spec = spec_from_meta(doc.at("meta"));
    table.label = doc.at("meta").value("label", "");
    for (const auto& row : doc.at("rows")) {
      table.rows.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
    }
    return table;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed curve JSON: ") + e.what());
  }
}

}  // namespace qrelax
