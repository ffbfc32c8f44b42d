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

#include <array>
#include <optional>
#include <vector>

#include "qrelax/channel.h"
#include "qrelax/qstate.h"

namespace qrelax {

// Transpose on the second qubit: (ij, kl) <- (il, kj).
DensityMatrix partial_transpose(const DensityMatrix& m);

// True when every entry off the diagonal and anti-diagonal is below tol.
bool is_x_state(const DensityMatrix& m, double tol = 1e-12);

// Eigenvalues of the partial transpose, ascending.
struct PtSpectrum {
  std::array<double, 4> lambdas{};

  double min() const { return lambdas[0]; }
  double sum() const;
};

// X-shaped inputs use the two 2×2 block closed forms
//   {ρ11, ρ44; |ρ23|} and {ρ22, ρ33; |ρ14|};
// anything else goes through hermitian_eigenvalues().
PtSpectrum pt_spectrum(const DensityMatrix& m);

// Closed-form path only; throws UnsupportedStructure on non-X input.
PtSpectrum pt_spectrum_x_state(const DensityMatrix& m);

// Σ|λ| - 1 over the partial-transpose spectrum. Not clamped.
double doe(const DensityMatrix& m);

// Closed-form matrix elements entering the literal PPT scalar.
struct PptClosedForm {
  double rho11 = 0.0;
  double rho44 = 0.0;
  double rho23 = 0.0;
  double rho32 = 0.0;
  double gamma_term = 0.0;  // (1-γ1)(1-γ2)·s_eq·t_eq

  double scalar() const { return rho11 * rho44 - rho23 * rho32; }
};

// Evaluates the four literal element formulas for the evolved pure family,
// keeping every p-dependent term. Negative means entangled.
PptClosedForm ppt_closed_form_paper(const FamilyParam& fp, const DecayFactors& df,
                                    double s_eq, double t_eq);
double ppt_scalar_paper(const FamilyParam& fp, const DecayFactors& df, double s_eq,
                        double t_eq);

// ρ11ρ44 - |ρ23|², the determinant of the partial-transpose block that can go
// negative. Throws UnsupportedStructure for non-X input.
double ppt_scalar_oracle(const DensityMatrix& m);

// Evolved pure-family state at time t (physical mode).
DensityMatrix evolved_family_density(const FamilyParam& fp, const ChannelParams& cp,
                                     double t,
                                     ChannelMode mode = ChannelMode::kPhysical);

inline constexpr int kLifetimeScanSteps = 2000;
inline constexpr double kLifetimeTolerance = 1e-9;

// First time the minimum partial-transpose eigenvalue of the evolved family
// stops being negative. Dense scan with step t_max/2000, then bisection to
// 1e-9. Returns 0 if separable at t = 0 and nullopt if still entangled at
// t_max. Throws DomainError unless t_max > 0.
std::optional<double> entangled_time(const FamilyParam& fp, const ChannelParams& cp,
                                     double t_max);

enum class DecayKind { kSuddenDeath, kAsymptotic, kInconclusive };

const char* to_string(DecayKind kind);

struct DecayVerdict {
  DecayKind kind = DecayKind::kInconclusive;
  std::optional<double> death_time;  // set for kSuddenDeath
};

inline constexpr double kDeathThreshold = 1e-9;
inline constexpr double kDecayedThreshold = 1e-6;

struct CurveRow {
  double t;
  double value;
};

// Sudden death: the curve drops below 1e-9 and stays there to the end of the
// sampled horizon. Asymptotic: above 1e-9 everywhere but below 1e-6 somewhere.
// Anything else is inconclusive.
DecayVerdict classify_decay(const std::vector<CurveRow>& doe_curve);

// Wootters concurrence of an X-state, for diagnostics only. Throws
// UnsupportedStructure otherwise.
double concurrence(const DensityMatrix& m);

}  // namespace qrelax
