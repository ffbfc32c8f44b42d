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

#include "qrelax/teleport.h"

#include <cmath>
#include <functional>

#include "qrelax/entanglement.h"
#include "qrelax/errors.h"

namespace qrelax {

namespace {

std::array<Complex, 4> bell_ket(BellState b) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (b) {
    case BellState::kPhiPlus:
      return {r, 0.0, 0.0, r};
    case BellState::kPhiMinus:
      return {r, 0.0, 0.0, -r};
    case BellState::kPsiPlus:
      return {0.0, r, r, 0.0};
    case BellState::kPsiMinus:
      break;
  }
  return {0.0, r, -r, 0.0};
}

const ComplexMatrix& correction_matrix(PauliCorrection c) {
  switch (c) {
    case PauliCorrection::kI:
      return pauli(0);
    case PauliCorrection::kX:
      return pauli(1);
    case PauliCorrection::kY:
      return pauli(2);
    case PauliCorrection::kZ:
      break;
  }
  return pauli(3);
}

bool is_family_shaped(const BlochState& s) {
  constexpr double kTol = 1e-12;
  for (int i = 0; i < 2; ++i)
    if (std::abs(s.a[i]) > kTol || std::abs(s.b[i]) > kTol) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && std::abs(s.c[i][j]) > kTol) return false;
  return true;
}

constexpr int kWindowScanSteps = 2000;
constexpr double kWindowTolerance = 1e-9;

// Window over which criterion(t) > 1 holds, starting at t = 0.
TimeWindow criterion_window(const std::function<double(double)>& criterion,
                            double t_max) {
  if (!(criterion(0.0) > 1.0)) return {0.0, true};
  const double dt = t_max / kWindowScanSteps;
  double prev = 0.0;
  for (int k = 1; k <= kWindowScanSteps; ++k) {
    const double t = k == kWindowScanSteps ? t_max : k * dt;
    if (!(criterion(t) > 1.0)) {
      double lo = prev, hi = t;
      while (hi - lo >= kWindowTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (criterion(mid) > 1.0 ? lo : hi) = mid;
      }
      return {0.5 * (lo + hi), true};
    }
    prev = t;
  }
  return {t_max, false};
}

}  // namespace

InputQubit::InputQubit(Complex lambda1, Complex lambda2) : l1_(lambda1), l2_(lambda2) {
  if (std::abs(std::norm(l1_) + std::norm(l2_) - 1.0) > 1e-12) {
    throw DomainError("input qubit amplitudes must satisfy |l1|^2 + |l2|^2 = 1");
  }
}

InputQubit InputQubit::from_real(double lambda1) {
  if (!(std::abs(lambda1) <= 1.0)) throw DomainError("lambda1 must lie in [-1,1]");
  return InputQubit(lambda1, std::sqrt(1.0 - lambda1 * lambda1));
}

ComplexMatrix InputQubit::projector() const {
  return ComplexMatrix(2, 2,
                       {l1_ * std::conj(l1_), l1_ * std::conj(l2_),
                        l2_ * std::conj(l1_), l2_ * std::conj(l2_)});
}

const char* to_string(BellState b) {
  switch (b) {
    case BellState::kPhiPlus:
      return "phi+";
    case BellState::kPhiMinus:
      return "phi-";
    case BellState::kPsiPlus:
      return "psi+";
    case BellState::kPsiMinus:
      break;
  }
  return "psi-";
}

const char* to_string(PauliCorrection c) {
  switch (c) {
    case PauliCorrection::kI:
      return "I";
    case PauliCorrection::kX:
      return "X";
    case PauliCorrection::kY:
      return "Y";
    case PauliCorrection::kZ:
      break;
  }
  return "Z";
}

TeleportOutcome teleport_protocol(const InputQubit& in, const DensityMatrix& channel,
                                  BellState outcome, PauliCorrection correction) {
  const ComplexMatrix total = tensor_product(in.projector(), channel.matrix());
  const ComplexMatrix bell =
      DensityMatrix::projector(bell_ket(outcome)).matrix();
  const ComplexMatrix proj = tensor_product(bell, ComplexMatrix::identity(2));
  const ComplexMatrix post = proj * total * proj;

  TeleportOutcome out;
  out.probability = post.trace().real();
  if (out.probability < kMinOutcomeProbability) {
    throw ZeroProbabilityOutcome(std::string("Bell outcome ") + to_string(outcome) +
                                 " has zero probability");
  }
  ComplexMatrix bob = partial_trace(post, 4, 2, Subsystem::kFirst);
  bob *= 1.0 / out.probability;
  const ComplexMatrix& u = correction_matrix(correction);
  out.bob_state = u * bob * u.adjoint();

  const Complex l1 = in.lambda1(), l2 = in.lambda2();
  const Complex f = std::conj(l1) * (out.bob_state(0, 0) * l1 + out.bob_state(0, 1) * l2) +
                    std::conj(l2) * (out.bob_state(1, 0) * l1 + out.bob_state(1, 1) * l2);
  out.fidelity = f.real();
  return out;
}

BestCorrection teleport_best_correction(const InputQubit& in, const DensityMatrix& channel,
                                        BellState outcome) {
  BestCorrection best;
  bool first = true;
  for (PauliCorrection c : kPauliCorrections) {
    TeleportOutcome o = teleport_protocol(in, channel, outcome, c);
    if (first || o.fidelity > best.outcome.fidelity) {
      best.correction = c;
      best.outcome = std::move(o);
      first = false;
    }
  }
  return best;
}

double horodecki_measure(const BlochState& s) {
  const Vec3 sv = symmetric3_singular_values(s.c);
  return sv[0] + sv[1] + sv[2];
}

double telp_paper(const FamilyParam& fp, const DecayFactors& df, double s, double te) {
  const double g1 = df.gamma1, g2 = df.gamma2, b1 = df.beta1, b2 = df.beta2;
  const double p = fp.p(), q = fp.q();
  const double gamma_term = (1 - g1) * (1 - g2) * s * te;
  const double bracket =
      gamma_term + p * (g1 * (1 - g2) * te - g2 * (1 - g1) * s) - g1 * g2;
  return 2.0 * q * q * b1 * b1 * b2 * b2 + bracket * bracket;
}

BobCoefficients bob_coefficients_paper(const InputQubit& in, const BlochState& e) {
  if (!is_family_shaped(e)) {
    throw InvalidInput("bob_coefficients_paper needs z-aligned Bloch vectors and a "
                       "diagonal correlation tensor");
  }
  const double A3 = e.a[2], B3 = e.b[2];
  const double C11 = e.c[0][0], C22 = e.c[1][1], C33 = e.c[2][2];
  const Complex l1 = in.lambda1(), l2 = in.lambda2();
  const double n1 = std::norm(l1), n2 = std::norm(l2);
  const Complex x12 = l1 * std::conj(l2);  // λ1 λ2*
  const Complex x21 = std::conj(l1) * l2;  // λ1* λ2
  BobCoefficients bc;
  bc.eta1 = 0.5 * (n1 * (1 + A3 - B3 - C33) + n2 * (1 - A3 + B3 + C33));
  bc.eta2 = 0.5 * (x12 * (C11 - C22) + x21 * (C11 + C22));
  bc.eta3 = 0.5 * (x12 * (C11 + C22) + x21 * (C11 - C22));
  bc.eta4 = 0.5 * (n1 * (1 + A3 + B3 + C33) + n2 * (1 - A3 + B3 - C33));
  return bc;
}

const char* to_string(FidelityVariant v) {
  switch (v) {
    case FidelityVariant::kPaper:
      return "paper";
    case FidelityVariant::kPaperNormalized:
      return "normalized";
    case FidelityVariant::kProtocol:
      break;
  }
  return "protocol";
}

FidelityVariant parse_fidelity_variant(const std::string& text) {
  if (text == "paper") return FidelityVariant::kPaper;
  if (text == "normalized") return FidelityVariant::kPaperNormalized;
  if (text == "protocol") return FidelityVariant::kProtocol;
  throw UsageError("unknown fidelity variant '" + text + "'");
}

double fidelity_paper(const InputQubit& in, const BobCoefficients& bc, bool normalize) {
  const Complex l1 = in.lambda1(), l2 = in.lambda2();
  const Complex f = std::norm(l1) * bc.eta1 + l1 * std::conj(l2) * bc.eta2 +
                    std::conj(l1) * l2 * bc.eta3 + std::norm(l2) * bc.eta4;
  if (!normalize) return f.real();
  const double norm = (bc.eta1 + bc.eta4).real();
  if (norm < 1e-14) {
    throw NumericalFailure("degenerate Bob operator: eta1 + eta4 < 1e-14");
  }
  return f.real() / norm;
}

double family_fidelity(const InputQubit& in, const FamilyParam& fp, const ChannelParams& cp,
                       double t, FidelityVariant variant, ChannelMode mode) {
  const BlochState evolved = apply_channel(generic_pure_state(fp), cp, t, mode);
  if (variant == FidelityVariant::kProtocol) {
    return teleport_best_correction(in, bloch_to_density(evolved), BellState::kPhiPlus)
        .outcome.fidelity;
  }
  return fidelity_paper(in, bob_coefficients_paper(in, evolved),
                        variant == FidelityVariant::kPaperNormalized);
}

TeleportWindows teleportation_window(const FamilyParam& fp, const ChannelParams& cp,
                                     double t_max) {
  if (!(t_max > 0.0)) throw DomainError("t_max must be > 0");
  TeleportWindows w;
  w.telp = criterion_window(
      [&](double t) {
        return telp_paper(fp, decay_factors(cp, t), cp.s_eq(), cp.t_eq());
      },
      t_max);
  w.horodecki = criterion_window(
      [&](double t) {
        return horodecki_measure(
            apply_channel(generic_pure_state(fp), cp, t, ChannelMode::kPhysical));
      },
      t_max);
  return w;
}

}  // namespace qrelax
