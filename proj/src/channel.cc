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

#include "qrelax/channel.h"

#include <cmath>

#include "qrelax/errors.h"

namespace qrelax {

namespace {

void require_nonnegative_time(double t) {
  if (!(t >= 0.0)) throw DomainError("time must be >= 0, got " + std::to_string(t));
}

double decay(double t, double time_constant) {
  if (std::isinf(t)) return 0.0;
  return std::exp(-t / time_constant);
}

BlochState apply_physical(const BlochState& s, const AffineQubitMap& ma,
                          const AffineQubitMap& mb) {
  BlochState out;
  const Vec3 da = {ma.d[0] * s.a[0], ma.d[1] * s.a[1], ma.d[2] * s.a[2]};
  const Vec3 db = {mb.d[0] * s.b[0], mb.d[1] * s.b[1], mb.d[2] * s.b[2]};
  for (std::size_t i = 0; i < 3; ++i) {
    out.a[i] = da[i] + ma.k[i];
    out.b[i] = db[i] + mb.k[i];
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.c[i][j] = ma.d[i] * s.c[i][j] * mb.d[j] + da[i] * mb.k[j] +
                    ma.k[i] * db[j] + ma.k[i] * mb.k[j];
  return out;
}

BlochState apply_paper_literal(const BlochState& s, const DecayFactors& df,
                               double s_eq, double t_eq) {
  const double g1 = df.gamma1, g2 = df.gamma2, b1 = df.beta1, b2 = df.beta2;
  const Vec3& A = s.a;
  const Vec3& B = s.b;
  const Mat3& C = s.c;
  // Terms are grouped as in the product law so that every entry except c13
  // agrees bit for bit with the physical route.
  const double k1 = (1 - g1) * s_eq;
  const double k2 = (1 - g2) * t_eq;
  const double k2_lit = (1 - g2) * s_eq;  // s_eq here, not t_eq
  BlochState out;
  // y-components decay with +beta, as the Bloch equations give; negating
  // them would make t = 0 a transpose.
  out.a = {b1 * A[0], b1 * A[1], g1 * A[2] + k1};
  out.b = {b2 * B[0], b2 * B[1], g2 * B[2] + k2};

  out.c[0][0] = b1 * C[0][0] * b2;
  out.c[0][1] = b1 * C[0][1] * b2;
  out.c[0][2] = b1 * C[0][2] * g2 + (b1 * A[0]) * k2_lit;
  // The table prints C12 in this slot; C21 is used since the 12/21 entries
  // transform independently under local diagonal maps.
  out.c[1][0] = b1 * C[1][0] * b2;
  out.c[1][1] = b1 * C[1][1] * b2;
  out.c[1][2] = b1 * C[1][2] * g2 + (b1 * A[1]) * k2;
  out.c[2][0] = g1 * C[2][0] * b2 + k1 * (b2 * B[0]);
  out.c[2][1] = g1 * C[2][1] * b2 + k1 * (b2 * B[1]);
  out.c[2][2] = g1 * C[2][2] * g2 + (g1 * A[2]) * k2 + k1 * (g2 * B[2]) + k1 * k2;
  return out;
}

// Single-qubit channel acting on |i><k|, as a 2×2 operator.
ComplexMatrix local_image(std::size_t i, std::size_t k, double beta, double gamma,
                          double eq) {
  ComplexMatrix out(2, 2);
  if (i != k) {
    out(i, k) = beta;
    return out;
  }
  const double z = (i == 0 ? 1.0 : -1.0) * gamma + (1.0 - gamma) * eq;
  out(0, 0) = 0.5 * (1.0 + z);
  out(1, 1) = 0.5 * (1.0 - z);
  return out;
}

}  // namespace

ChannelParams::ChannelParams(double t1a, double t2a, double t1b, double t2b,
                             double s_eq, double t_eq)
    : t1a_(t1a), t2a_(t2a), t1b_(t1b), t2b_(t2b), s_eq_(s_eq), t_eq_(t_eq) {
  for (double v : {t1a, t2a, t1b, t2b}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("relaxation times must be finite and > 0");
    }
  }
  if (!(std::abs(s_eq) <= 1.0) || !(std::abs(t_eq) <= 1.0)) {
    throw DomainError("equilibrium values must lie in [-1,1]");
  }
}

ChannelParams ChannelParams::from_ratios(double alpha_a, double alpha_b, double s_eq,
                                         double t_eq, double t2a, double t2b) {
  return ChannelParams(alpha_a * t2a, t2a, alpha_b * t2b, t2b, s_eq, t_eq);
}

ChannelParams ChannelParams::from_ratios_fixed_t1(double alpha_a, double alpha_b,
                                                  double s_eq, double t_eq, double t1a,
                                                  double t1b) {
  if (!(alpha_a > 0.0) || !(alpha_b > 0.0)) throw DomainError("alpha must be > 0");
  return ChannelParams(t1a, t1a / alpha_a, t1b, t1b / alpha_b, s_eq, t_eq);
}

DecayFactors decay_factors(const ChannelParams& cp, double t) {
  require_nonnegative_time(t);
  return {decay(t, cp.t1a()), decay(t, cp.t2a()), decay(t, cp.t1b()),
          decay(t, cp.t2b())};
}

Vec3 AffineQubitMap::apply(const Vec3& v) const {
  return {d[0] * v[0] + k[0], d[1] * v[1] + k[1], d[2] * v[2] + k[2]};
}

AffineQubitMap bloch_qubit_map(double beta, double gamma, double eq) {
  return {{beta, beta, gamma}, {0.0, 0.0, (1.0 - gamma) * eq}};
}

const char* to_string(ChannelMode mode) {
  return mode == ChannelMode::kPaperLiteral ? "paper-literal" : "physical";
}

ChannelMode parse_channel_mode(const std::string& text) {
  if (text == "paper-literal") return ChannelMode::kPaperLiteral;
  if (text == "physical") return ChannelMode::kPhysical;
  throw UsageError("unknown channel mode '" + text + "'");
}

BlochState apply_channel(const BlochState& s, const DecayFactors& df, double s_eq,
                         double t_eq, ChannelMode mode) {
  if (mode == ChannelMode::kPaperLiteral) return apply_paper_literal(s, df, s_eq, t_eq);
  return apply_physical(s, bloch_qubit_map(df.beta1, df.gamma1, s_eq),
                        bloch_qubit_map(df.beta2, df.gamma2, t_eq));
}

BlochState apply_channel(const BlochState& s, const ChannelParams& cp, double t,
                         ChannelMode mode) {
  return apply_channel(s, decay_factors(cp, t), cp.s_eq(), cp.t_eq(), mode);
}

ModeComparison compare_modes(const BlochState& s, const DecayFactors& df, double s_eq,
                             double t_eq) {
  const BlochState lit = apply_channel(s, df, s_eq, t_eq, ChannelMode::kPaperLiteral);
  const BlochState phy = apply_channel(s, df, s_eq, t_eq, ChannelMode::kPhysical);
  ModeComparison report;
  auto note = [&](char block, int row, int col, double x, double y) {
    const double d = std::abs(x - y);
    if (d > 0.0) report.offending.push_back({block, row, col, d});
    report.max_deviation = std::max(report.max_deviation, d);
  };
  for (int i = 0; i < 3; ++i) {
    note('a', i + 1, 0, lit.a[i], phy.a[i]);
    note('b', i + 1, 0, lit.b[i], phy.b[i]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) note('c', i + 1, j + 1, lit.c[i][j], phy.c[i][j]);
  return report;
}

ModeComparison compare_modes(const BlochState& s, const ChannelParams& cp, double t) {
  return compare_modes(s, decay_factors(cp, t), cp.s_eq(), cp.t_eq());
}

DensityMatrix apply_channel_density(const DensityMatrix& dm, const ChannelParams& cp,
                                    double t) {
  const DecayFactors df = decay_factors(cp, t);
  const ComplexMatrix& m = dm.matrix();
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const Complex coeff = m(2 * i + j, 2 * k + l);
          if (coeff == Complex{}) continue;
          const ComplexMatrix image =
              tensor_product(local_image(i, k, df.beta1, df.gamma1, cp.s_eq()),
                             local_image(j, l, df.beta2, df.gamma2, cp.t_eq()));
          out += image * coeff;
        }
  return DensityMatrix(std::move(out));
}

CpCheck cp_check(const DecayFactors& df, double s_eq, double t_eq) {
  auto gamma_bound = [](double gamma, double beta, double eq) {
    return gamma > (2.0 * beta + eq) / (eq + 2.0);
  };
  auto beta_bound = [](double gamma, double beta, double eq) {
    return beta < std::sqrt(1.0 - eq) / 4.0 * (1.0 - gamma);
  };
  CpCheck r;
  r.a_gamma_bound = gamma_bound(df.gamma1, df.beta1, s_eq);
  r.a_beta_bound = beta_bound(df.gamma1, df.beta1, s_eq);
  r.b_gamma_bound = gamma_bound(df.gamma2, df.beta2, t_eq);
  r.b_beta_bound = beta_bound(df.gamma2, df.beta2, t_eq);
  return r;
}

}  // namespace qrelax
