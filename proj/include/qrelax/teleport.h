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
#include <string>

#include "qrelax/channel.h"
#include "qrelax/qstate.h"

namespace qrelax {

// |Ψ> = λ1|0> + λ2|1>.
class InputQubit {
 public:
  // Throws DomainError unless |λ1|² + |λ2|² = 1 within 1e-12.
  InputQubit(Complex lambda1, Complex lambda2);
  // Real amplitudes with λ2 = sqrt(1 - λ1²); requires |λ1| <= 1.
  static InputQubit from_real(double lambda1);

  Complex lambda1() const { return l1_; }
  Complex lambda2() const { return l2_; }
  ComplexMatrix projector() const;

 private:
  Complex l1_;
  Complex l2_;
};

enum class BellState { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };
enum class PauliCorrection { kI, kX, kY, kZ };

inline constexpr std::array<BellState, 4> kBellStates = {
    BellState::kPhiPlus, BellState::kPhiMinus, BellState::kPsiPlus,
    BellState::kPsiMinus};
inline constexpr std::array<PauliCorrection, 4> kPauliCorrections = {
    PauliCorrection::kI, PauliCorrection::kX, PauliCorrection::kY,
    PauliCorrection::kZ};

const char* to_string(BellState b);
const char* to_string(PauliCorrection c);

struct TeleportOutcome {
  ComplexMatrix bob_state;  // 2×2, unit trace
  double probability = 0.0;
  double fidelity = 0.0;
};

inline constexpr double kMinOutcomeProbability = 1e-14;

// Standard protocol on ρ_Ψ ⊗ ρ_channel with qubit order (input; Alice, Bob).
// Alice's Bell projection selects `outcome`; Bob applies `correction` to the
// normalized conditional state. Throws ZeroProbabilityOutcome when the outcome
// probability is below 1e-14.
TeleportOutcome teleport_protocol(const InputQubit& in, const DensityMatrix& channel,
                                  BellState outcome, PauliCorrection correction);

struct BestCorrection {
  PauliCorrection correction = PauliCorrection::kI;
  TeleportOutcome outcome;
};

// Tries all four corrections for the given outcome and keeps the highest
// fidelity (first one wins ties).
BestCorrection teleport_best_correction(const InputQubit& in, const DensityMatrix& channel,
                                        BellState outcome);

// Σ singular values of the correlation tensor; useful for teleportation when > 1.
double horodecki_measure(const BlochState& s);

// 2q²β1²β2² + [Γ + p(γ1(1-γ2)t_eq - γ2(1-γ1)s_eq) - γ1γ2]², taken literally.
double telp_paper(const FamilyParam& fp, const DecayFactors& df, double s_eq, double t_eq);

// η coefficients of Bob's operator η1|0><0| + η2|0><1| + η3|1><0| + η4|1><1|.
struct BobCoefficients {
  Complex eta1, eta2, eta3, eta4;
};

// The literal closed-form η expressions, evaluated verbatim (including their asymmetric
// sign pattern). Requires a family-shaped state: a and b along z and c
// diagonal; throws InvalidInput otherwise.
BobCoefficients bob_coefficients_paper(const InputQubit& in, const BlochState& evolved);

enum class FidelityVariant {
  kPaper,            // the literal bilinear form
  kPaperNormalized,  // divided by η1 + η4
  kProtocol,         // best-correction protocol simulation, outcome Φ+
};

const char* to_string(FidelityVariant v);
FidelityVariant parse_fidelity_variant(const std::string& text);

// F = |λ1|²η1 + λ1λ2*η2 + λ1*λ2η3 + |λ2|²η4 (real part). With normalize,
// divides by η1 + η4 and throws NumericalFailure if that is below 1e-14.
double fidelity_paper(const InputQubit& in, const BobCoefficients& bc,
                      bool normalize = false);

// Teleportation fidelity of the evolved family state at time t.
double family_fidelity(const InputQubit& in, const FamilyParam& fp, const ChannelParams& cp,
                       double t, FidelityVariant variant,
                       ChannelMode mode = ChannelMode::kPhysical);

// [0, end]. `bounded` is false when the criterion still holds at the horizon.
struct TimeWindow {
  double end = 0.0;
  bool bounded = true;

  bool empty() const { return bounded && end == 0.0; }
};

struct TeleportWindows {
  TimeWindow telp;
  TimeWindow horodecki;
};

// First crossing of telp_paper = 1 (and horodecki_measure = 1) by a
// 2000-point scan on [0, t_max] followed by bisection to 1e-9. A criterion
// that is not strictly above 1 at t = 0 yields the empty window [0, 0].
TeleportWindows teleportation_window(const FamilyParam& fp, const ChannelParams& cp,
                                     double t_max);

}  // namespace qrelax
