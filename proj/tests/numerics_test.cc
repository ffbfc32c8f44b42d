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

#include "qrelax/numerics.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qrelax/errors.h"
#include "qrelax/qstate.h"
#include "qrelax/random_states.h"

namespace qrelax {
namespace {

// Reduced states of a random two-qubit density matrix; any 2×2 positive
// unit-trace matrix would do.
ComplexMatrix random_qubit(std::mt19937_64& rng) {
  return partial_trace(random_density_matrix(rng).matrix(), Subsystem::kSecond);
}

TEST(SymmetricEigenvalues, TwoByTwo) {
  const auto ev = symmetric_eigenvalues({2, 1, 1, 2}, 2);
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 1.0, 1e-13);
  EXPECT_NEAR(ev[1], 3.0, 1e-13);
}

TEST(SymmetricEigenvalues, AlreadyDiagonalIsSorted) {
  const auto ev = symmetric_eigenvalues({5, 0, 0, 0, -1, 0, 0, 0, 2}, 3);
  EXPECT_DOUBLE_EQ(ev[0], -1.0);
  EXPECT_DOUBLE_EQ(ev[1], 2.0);
  EXPECT_DOUBLE_EQ(ev[2], 5.0);
}

TEST(HermitianEigenvalues, SingletPartialTransposeSpectrum) {
  // PT of the singlet: 1/2 on |01>,|10> and -1/2 on the (00, 11) corners.
  ComplexMatrix pt(4, 4);
  pt(1, 1) = 0.5;
  pt(2, 2) = 0.5;
  pt(0, 3) = -0.5;
  pt(3, 0) = -0.5;
  const auto ev = hermitian_eigenvalues(pt);
  ASSERT_EQ(ev.size(), 4u);
  EXPECT_NEAR(ev[0], -0.5, 1e-13);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(ev[i], 0.5, 1e-13);
}

TEST(HermitianEigenvalues, PauliY) {
  const auto ev = hermitian_eigenvalues(pauli(2));
  EXPECT_NEAR(ev[0], -1.0, 1e-13);
  EXPECT_NEAR(ev[1], 1.0, 1e-13);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  ComplexMatrix m(2, 2, {1.0, 1.0, 0.0, 1.0});
  EXPECT_THROW(hermitian_eigenvalues(m), InvalidInput);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix(2, 3)), InvalidInput);
}

TEST(HermitianEigenvalues, RandomStatesHaveUnitSumAndNoNegatives) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 20; ++n) {
    const auto ev = hermitian_eigenvalues(random_density_matrix(rng).matrix());
    double sum = 0.0;
    for (double v : ev) sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_GE(ev.front(), -1e-12);
    EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
  }
}

TEST(HermitianEigenvalues, QubitClosedForm) {
  // λ± = (1 ± |r|)/2 for ρ = (I + r·σ)/2.
  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    const ComplexMatrix rho = random_qubit(rng);
    const double x = 2 * rho(0, 1).real(), y = -2 * rho(0, 1).imag();
    const double z = (rho(0, 0) - rho(1, 1)).real();
    const double r = std::sqrt(x * x + y * y + z * z);
    const auto ev = hermitian_eigenvalues(rho);
    EXPECT_NEAR(ev[0], 0.5 * (1 - r), 1e-12);
    EXPECT_NEAR(ev[1], 0.5 * (1 + r), 1e-12);
  }
}

TEST(SingularValues, DiagonalWithSigns) {
  const Mat3 c = {{{-0.5, 0, 0}, {0, 2, 0}, {0, 0, -1}}};
  const Vec3 sv = symmetric3_singular_values(c);
  EXPECT_NEAR(sv[0], 2.0, 1e-13);
  EXPECT_NEAR(sv[1], 1.0, 1e-13);
  EXPECT_NEAR(sv[2], 0.5, 1e-13);
}

TEST(SingularValues, RankOne) {
  const double r = 1.0 / std::sqrt(3.0);
  Mat3 c{};
  for (int i = 0; i < 3; ++i) c[i][0] = r;
  const Vec3 sv = symmetric3_singular_values(c);
  EXPECT_NEAR(sv[0], 1.0, 1e-12);
  EXPECT_NEAR(sv[1], 0.0, 1e-6);
  EXPECT_NEAR(sv[2], 0.0, 1e-6);
}

TEST(TensorProduct, KnownEntries) {
  const ComplexMatrix k = tensor_product(pauli(1), pauli(3));
  ASSERT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(0, 2), Complex(1.0));
  EXPECT_EQ(k(1, 3), Complex(-1.0));
  EXPECT_EQ(k(2, 0), Complex(1.0));
  EXPECT_EQ(k(0, 0), Complex(0.0));
}

TEST(PartialTrace, RecoversProductFactors) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 10; ++n) {
    const ComplexMatrix a = random_qubit(rng);
    const ComplexMatrix b = random_qubit(rng);
    const ComplexMatrix ab = tensor_product(a, b);
    EXPECT_LT(partial_trace(ab, Subsystem::kSecond).max_abs_diff(a), 1e-14);
    EXPECT_LT(partial_trace(ab, Subsystem::kFirst).max_abs_diff(b), 1e-14);
  }
}

TEST(PartialTrace, UnequalDimensions) {
  // Tr_first of (I4/4) ⊗ ρ on C^4 ⊗ C^2.
  std::mt19937_64 rng(5);
  const ComplexMatrix rho = random_qubit(rng);
  const ComplexMatrix big = tensor_product(ComplexMatrix::identity(4) * Complex(0.25), rho);
  EXPECT_LT(partial_trace(big, 4, 2, Subsystem::kFirst).max_abs_diff(rho), 1e-14);
}

TEST(Bisect, FindsRoot) {
  const double r = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
  EXPECT_NEAR(r, std::sqrt(2.0), 1e-12);
}

TEST(Bisect, RootAtEndpoint) {
  EXPECT_NEAR(bisect([](double x) { return x - 1.0; }, 0.0, 1.0, 1e-10), 1.0, 1e-10);
}

TEST(Bisect, NoSignChangeThrows) {
  EXPECT_THROW(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-9), BracketError);
  EXPECT_THROW(bisect([](double x) { return x; }, -1.0, 1.0, 0.0), InvalidInput);
}

}  // namespace
}  // namespace qrelax
