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

#include "qrelax/entanglement.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrelax/errors.h"

namespace qrelax {

namespace {

// Eigenvalues of [[x, c], [c*, y]] with |c| = mag, minus root first. The
// minus root is formed from the determinant to keep relative precision when
// it is much smaller than the trace.
std::array<double, 2> block_eigenvalues(double x, double y, double mag) {
  const double mean = 0.5 * (x + y);
  const double half_gap = 0.5 * (x - y);
  const double radius = std::hypot(half_gap, mag);
  const double plus = mean + radius;
  double minus = mean - radius;
  if (plus > 0.0) minus = (x * y - mag * mag) / plus;
  return {minus, plus};
}

}  // namespace

DensityMatrix partial_transpose(const DensityMatrix& dm) {
  const ComplexMatrix& m = dm.matrix();
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
  return DensityMatrix(std::move(out));
}

bool is_x_state(const DensityMatrix& m, double tol) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      if (r == c || r + c == 3) continue;
      if (std::abs(m(r, c)) >= tol) return false;
    }
  return true;
}

double PtSpectrum::sum() const {
  return std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
}

PtSpectrum pt_spectrum_x_state(const DensityMatrix& m) {
  if (!is_x_state(m)) {
    throw UnsupportedStructure("closed-form PT spectrum needs an X-state");
  }
  // After the partial transpose ρ23 couples |00>,|11> and ρ14 couples |01>,|10>.
  const auto outer = block_eigenvalues(m(0, 0).real(), m(3, 3).real(), std::abs(m(1, 2)));
  const auto inner = block_eigenvalues(m(1, 1).real(), m(2, 2).real(), std::abs(m(0, 3)));
  PtSpectrum s;
  s.lambdas = {outer[0], outer[1], inner[0], inner[1]};
  std::stable_sort(s.lambdas.begin(), s.lambdas.end());
  return s;
}

PtSpectrum pt_spectrum(const DensityMatrix& m) {
  if (is_x_state(m)) return pt_spectrum_x_state(m);
  const auto eig = hermitian_eigenvalues(partial_transpose(m).matrix());
  PtSpectrum s;
  std::copy(eig.begin(), eig.end(), s.lambdas.begin());
  return s;
}

double doe(const DensityMatrix& m) {
  const PtSpectrum s = pt_spectrum(m);
  double total = 0.0;
  for (double l : s.lambdas) total += std::abs(l);
  return total - 1.0;
}

PptClosedForm ppt_closed_form_paper(const FamilyParam& fp, const DecayFactors& df,
                                    double s, double te) {
  const double g1 = df.gamma1, g2 = df.gamma2, p = fp.p();
  PptClosedForm f;
  f.gamma_term = (1 - g1) * (1 - g2) * s * te;
  const double G = f.gamma_term;
  f.rho11 = 0.25 * ((1 - g1 * g2) + (1 - g1) * s + (1 - g2) * te + G) +
            0.25 * p * ((g1 - g2) + g1 * (1 - g2) * s - g2 * (1 - g1) * te);
  f.rho44 = 0.25 * ((1 - g1 * g2) - (1 - g1) * s - (1 - g2) * te + G) +
            0.25 * p * (-(g1 - g2) + g1 * (1 - g2) * s - g2 * (1 - g1) * te);
  // The last p-term of rho23 carries s_eq, deliberately.
  f.rho23 = 0.25 * ((1 + g1 * g2) - (1 - g1) * s + (1 - g2) * te - G) +
            0.25 * p * ((g1 + g2) - g1 * (1 - g2) * s + g2 * (1 - g1) * s);
  f.rho32 = 0.25 * ((1 + g1 * g2) + (1 - g1) * s - (1 - g2) * te - G) +
            0.25 * p * (-(g1 + g2) + g1 * (1 - g2) * s - g2 * (1 - g1) * te);
  return f;
}

double ppt_scalar_paper(const FamilyParam& fp, const DecayFactors& df, double s_eq,
                        double t_eq) {
  return ppt_closed_form_paper(fp, df, s_eq, t_eq).scalar();
}

double ppt_scalar_oracle(const DensityMatrix& m) {
  if (!is_x_state(m)) {
    throw UnsupportedStructure(
        "ppt_scalar_oracle needs an X-state; use pt_spectrum for general input");
  }
  return m(0, 0).real() * m(3, 3).real() - std::norm(m(1, 2));
}

DensityMatrix evolved_family_density(const FamilyParam& fp, const ChannelParams& cp,
                                     double t, ChannelMode mode) {
  return bloch_to_density(apply_channel(generic_pure_state(fp), cp, t, mode));
}

std::optional<double> entangled_time(const FamilyParam& fp, const ChannelParams& cp,
                                     double t_max) {
  if (!(t_max > 0.0)) throw DomainError("t_max must be > 0");
  auto min_eig = [&](double t) {
    return pt_spectrum(evolved_family_density(fp, cp, t)).min();
  };
  if (min_eig(0.0) >= 0.0) return 0.0;
  const double dt = t_max / kLifetimeScanSteps;
  double prev = 0.0;
  for (int k = 1; k <= kLifetimeScanSteps; ++k) {
    const double t = k == kLifetimeScanSteps ? t_max : k * dt;
    if (min_eig(t) >= 0.0) {
      // Invariant: min_eig(lo) < 0 <= min_eig(hi).
      double lo = prev, hi = t;
      while (hi - lo >= kLifetimeTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (min_eig(mid) >= 0.0 ? hi : lo) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev = t;
  }
  return std::nullopt;
}

const char* to_string(DecayKind kind) {
  switch (kind) {
    case DecayKind::kSuddenDeath:
      return "sudden-death";
    case DecayKind::kAsymptotic:
      return "asymptotic";
    case DecayKind::kInconclusive:
      break;
  }
  return "inconclusive";
}

DecayVerdict classify_decay(const std::vector<CurveRow>& curve) {
  DecayVerdict v;
  if (curve.empty()) return v;
  if (curve.back().value < kDeathThreshold) {
    std::size_t first = curve.size() - 1;
    while (first > 0 && curve[first - 1].value < kDeathThreshold) --first;
    v.kind = DecayKind::kSuddenDeath;
    v.death_time = curve[first].t;
    return v;
  }
  const bool alive = std::all_of(curve.begin(), curve.end(),
                                 [](const CurveRow& r) { return r.value > kDeathThreshold; });
  const bool decayed = std::any_of(curve.begin(), curve.end(),
                                   [](const CurveRow& r) { return r.value < kDecayedThreshold; });
  if (alive && decayed) v.kind = DecayKind::kAsymptotic;
  return v;
}

double concurrence(const DensityMatrix& dm) {
  if (!is_x_state(dm)) {
    throw UnsupportedStructure("concurrence is implemented for X-states only");
  }
  const double r11 = dm(0, 0).real(), r22 = dm(1, 1).real();
  const double r33 = dm(2, 2).real(), r44 = dm(3, 3).real();
  const double c14 = std::abs(dm(0, 3)), c23 = std::abs(dm(1, 2));
  return std::max({0.0, 2.0 * (c23 - std::sqrt(std::max(0.0, r11 * r44))),
                   2.0 * (c14 - std::sqrt(std::max(0.0, r22 * r33)))});
}

}  // namespace qrelax
