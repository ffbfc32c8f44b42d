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

#include "qrelax/numerics.h"

namespace qrelax {

// Fifteen-parameter description of a two-qubit state:
//   rho = 1/4 (I + a·σ⊗I + b·I⊗τ + Σ c_ij σ_i⊗τ_j).
// Physicality is not enforced; see validate_state().
struct BlochState {
  Vec3 a{};
  Vec3 b{};
  Mat3 c{};

  friend bool operator==(const BlochState&, const BlochState&) = default;
};

// Largest componentwise |x - y| over a, b and c.
double max_abs_diff(const BlochState& x, const BlochState& y);

// 4×4 density matrix in the basis {|00>, |01>, |10>, |11>}; the first qubit
// is the most significant bit.
class DensityMatrix {
 public:
  // Requires a 4×4 matrix; Hermiticity and trace are not checked here.
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix maximally_mixed();
  // ½(|01> - |10>)(<01| - <10|)
  static DensityMatrix singlet();
  // |ket><ket| for a (not necessarily normalized) 4-vector.
  static DensityMatrix projector(const std::array<Complex, 4>& ket);

  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  ComplexMatrix m_;
};

// Generic pure family |ψ_p>: a = (0,0,p), b = (0,0,-p), c = diag(-q,-q,-1)
// with q = sqrt(1 - p²). p = 0 is the singlet, p = 1 the product |01>.
class FamilyParam {
 public:
  // Throws DomainError unless 0 <= p <= 1.
  explicit FamilyParam(double p);

  double p() const { return p_; }
  double q() const { return q_; }

  friend bool operator==(const FamilyParam&, const FamilyParam&) = default;

 private:
  double p_;
  double q_;
};

BlochState generic_pure_state(const FamilyParam& fp);

DensityMatrix bloch_to_density(const BlochState& s);

// Pauli-trace inversion of bloch_to_density. Throws InvalidInput when the
// matrix deviates from Hermitian or unit trace by more than 1e-9.
BlochState density_to_bloch(const DensityMatrix& m);

enum class Side { kA, kB };

Vec3 reduced_qubit(const BlochState& s, Side side);

struct StateDiagnostics {
  double min_eigenvalue = 0.0;
  double trace_deviation = 0.0;
  double hermiticity_deviation = 0.0;
  bool physical = false;
};

inline constexpr double kPhysicalEigenTolerance = 1e-10;

// Never throws. `physical` requires min eigenvalue >= -1e-10 together with
// unit trace and Hermiticity at the same tolerance. A non-Hermitian matrix
// reports an infinite negative min eigenvalue.
StateDiagnostics validate_state(const DensityMatrix& m);

// Tr ρ²
double purity(const DensityMatrix& m);

// Pauli matrices σ_0 = I, σ_1 = X, σ_2 = Y, σ_3 = Z.
const ComplexMatrix& pauli(int index);

}  // namespace qrelax
