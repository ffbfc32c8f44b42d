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

#include "qrelax/qstate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qrelax/errors.h"

namespace qrelax {

namespace {

// σ_i ⊗ σ_j for i, j in 0..3, built once.
const std::array<std::array<ComplexMatrix, 4>, 4>& pauli_products() {
  static const auto table = [] {
    std::array<std::array<ComplexMatrix, 4>, 4> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[i][j] = tensor_product(pauli(i), pauli(j));
    return t;
  }();
  return table;
}

// Tr(m · P) for a Hermitian Pauli string P; real part only.
double pauli_expectation(const ComplexMatrix& m, const ComplexMatrix& p) {
  Complex acc{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) acc += m(r, k) * p(k, r);
  return acc.real();
}

}  // namespace

const ComplexMatrix& pauli(int index) {
  static const std::array<ComplexMatrix, 4> kPauli = {
      ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 1.0}),
      ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}),
      ComplexMatrix(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}),
      ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}),
  };
  if (index < 0 || index > 3) throw InvalidInput("pauli index must be 0..3");
  return kPauli[static_cast<std::size_t>(index)];
}

double max_abs_diff(const BlochState& x, const BlochState& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    d = std::max(d, std::abs(x.a[i] - y.a[i]));
    d = std::max(d, std::abs(x.b[i] - y.b[i]));
    for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(x.c[i][j] - y.c[i][j]));
  }
  return d;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 4 || m_.cols() != 4) {
    throw InvalidInput("density matrix must be 4x4");
  }
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(ComplexMatrix::identity(4) * Complex(0.25));
}

DensityMatrix DensityMatrix::singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return projector({0.0, r, -r, 0.0});
}

DensityMatrix DensityMatrix::projector(const std::array<Complex, 4>& ket) {
  ComplexMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = ket[r] * std::conj(ket[c]);
  return DensityMatrix(std::move(m));
}

FamilyParam::FamilyParam(double p) : p_(p), q_(0.0) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("family parameter p must lie in [0,1], got " + std::to_string(p));
  }
  q_ = std::sqrt(1.0 - p * p);
}

BlochState generic_pure_state(const FamilyParam& fp) {
  BlochState s;
  s.a = {0.0, 0.0, fp.p()};
  s.b = {0.0, 0.0, -fp.p()};
  s.c[0][0] = -fp.q();
  s.c[1][1] = -fp.q();
  s.c[2][2] = -1.0;
  return s;
}

DensityMatrix bloch_to_density(const BlochState& s) {
  const auto& pp = pauli_products();
  ComplexMatrix m = pp[0][0];
  for (int i = 1; i <= 3; ++i) {
    m += pp[i][0] * Complex(s.a[i - 1]);
    m += pp[0][i] * Complex(s.b[i - 1]);
    for (int j = 1; j <= 3; ++j) m += pp[i][j] * Complex(s.c[i - 1][j - 1]);
  }
  m *= 0.25;
  return DensityMatrix(std::move(m));
}

BlochState density_to_bloch(const DensityMatrix& dm) {
  const ComplexMatrix& m = dm.matrix();
  if (m.hermiticity_deviation() > 1e-9) {
    throw InvalidInput("density_to_bloch: matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0)) > 1e-9) {
    throw InvalidInput("density_to_bloch: trace is not 1");
  }
  const auto& pp = pauli_products();
  BlochState s;
  for (int i = 1; i <= 3; ++i) {
    s.a[i - 1] = pauli_expectation(m, pp[i][0]);
    s.b[i - 1] = pauli_expectation(m, pp[0][i]);
    for (int j = 1; j <= 3; ++j) s.c[i - 1][j - 1] = pauli_expectation(m, pp[i][j]);
  }
  return s;
}

Vec3 reduced_qubit(const BlochState& s, Side side) {
  return side == Side::kA ? s.a : s.b;
}

StateDiagnostics validate_state(const DensityMatrix& dm) {
  const ComplexMatrix& m = dm.matrix();
  StateDiagnostics d;
  d.hermiticity_deviation = m.hermiticity_deviation();
  d.trace_deviation = std::abs(m.trace() - Complex(1.0));
  try {
    const auto eig = hermitian_eigenvalues(m);
    d.min_eigenvalue = eig.front();
  } catch (const std::exception&) {
    d.min_eigenvalue = -std::numeric_limits<double>::infinity();
  }
  d.physical = d.min_eigenvalue >= -kPhysicalEigenTolerance &&
               d.trace_deviation <= kPhysicalEigenTolerance &&
               d.hermiticity_deviation <= kPhysicalEigenTolerance;
  return d;
}

double purity(const DensityMatrix& dm) {
  const ComplexMatrix& m = dm.matrix();
  return (m * m).trace().real();
}

}  // namespace qrelax
