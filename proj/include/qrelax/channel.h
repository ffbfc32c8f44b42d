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

#include "qrelax/qstate.h"

namespace qrelax {

// Relaxation times and equilibrium z-polarizations of the two local Bloch
// channels. Times are dimensionless; only their ratios are meaningful.
class ChannelParams {
 public:
  // Throws DomainError unless every time is > 0 and |s_eq|, |t_eq| <= 1.
  ChannelParams(double t1a, double t2a, double t1b, double t2b, double s_eq,
                double t_eq);

  // T1 = alpha·T2 with the given transverse times (default unit T2 = 1).
  static ChannelParams from_ratios(double alpha_a, double alpha_b, double s_eq,
                                   double t_eq, double t2a = 1.0, double t2b = 1.0);
  // T2 = T1/alpha with the given longitudinal times. Used when sweeping alpha
  // at a fixed population-relaxation time.
  static ChannelParams from_ratios_fixed_t1(double alpha_a, double alpha_b,
                                            double s_eq, double t_eq,
                                            double t1a = 1.0, double t1b = 1.0);

  double t1a() const { return t1a_; }
  double t2a() const { return t2a_; }
  double t1b() const { return t1b_; }
  double t2b() const { return t2b_; }
  double s_eq() const { return s_eq_; }
  double t_eq() const { return t_eq_; }
  double alpha_a() const { return t1a_ / t2a_; }
  double alpha_b() const { return t1b_ / t2b_; }

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;

 private:
  double t1a_, t2a_, t1b_, t2b_;
  double s_eq_, t_eq_;
};

// gamma_i = exp(-t/T1i), beta_i = exp(-t/T2i); index 1 is qubit a.
struct DecayFactors {
  double gamma1 = 1.0;
  double beta1 = 1.0;
  double gamma2 = 1.0;
  double beta2 = 1.0;
};

// Throws DomainError for t < 0. t = +inf yields all zeros.
DecayFactors decay_factors(const ChannelParams& cp, double t);

// Single-qubit Bloch map v -> diag(d)·v + k.
struct AffineQubitMap {
  Vec3 d{};
  Vec3 k{};

  Vec3 apply(const Vec3& v) const;
};

// d = (beta, beta, gamma), k = (0, 0, (1-gamma)·eq).
AffineQubitMap bloch_qubit_map(double beta, double gamma, double eq);

enum class ChannelMode {
  // Term-by-term closed-form update whose c13 entry carries s_eq where the
  // product law gives t_eq.
  kPaperLiteral,
  // Tensor product of the two affine qubit maps.
  kPhysical,
};

const char* to_string(ChannelMode mode);
// Accepts "paper-literal" and "physical"; throws UsageError otherwise.
ChannelMode parse_channel_mode(const std::string& text);

BlochState apply_channel(const BlochState& s, const DecayFactors& df, double s_eq,
                         double t_eq, ChannelMode mode);
BlochState apply_channel(const BlochState& s, const ChannelParams& cp, double t,
                         ChannelMode mode);

struct ModeDeviation {
  char block;  // 'a', 'b' or 'c'
  int row;     // 1-based
  int col;     // 1-based; 0 for vector blocks
  double magnitude;
};

struct ModeComparison {
  double max_deviation = 0.0;
  std::vector<ModeDeviation> offending;  // entries with nonzero difference
};

ModeComparison compare_modes(const BlochState& s, const DecayFactors& df,
                             double s_eq, double t_eq);
ModeComparison compare_modes(const BlochState& s, const ChannelParams& cp, double t);

// Evolves ρ directly as a superoperator on matrix elements: each local
// channel maps |i><k| to a 2×2 operator, and the two-qubit action is their
// tensor product. Independent of the Bloch-vector route.
DensityMatrix apply_channel_density(const DensityMatrix& m, const ChannelParams& cp,
                                    double t);

struct CpCheck {
  // Per qubit: the two inequalities and their conjunction.
  bool a_gamma_bound = false;
  bool a_beta_bound = false;
  bool b_gamma_bound = false;
  bool b_beta_bound = false;

  bool qubit_a() const { return a_gamma_bound && a_beta_bound; }
  bool qubit_b() const { return b_gamma_bound && b_beta_bound; }
  bool both() const { return qubit_a() && qubit_b(); }
};

// The closed-form complete-positivity inequalities, evaluated literally with the
// equilibrium values in place of the unsubscripted expectations:
//   gamma > (2·beta + eq)/(eq + 2)   and   beta < sqrt(1 - eq)/4 · (1 - gamma).
// These fail at t = 0 for every eq in (-1, 1).
CpCheck cp_check(const DecayFactors& df, double s_eq, double t_eq);

}  // namespace qrelax
