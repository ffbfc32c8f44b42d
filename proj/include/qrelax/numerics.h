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
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace qrelax {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline constexpr std::size_t kMaxMatrixDim = 8;

// Small dense complex matrix, row-major. Dimensions are capped at
// kMaxMatrixDim; everything in this library is at most three qubits.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::initializer_list<Complex> values);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::initializer_list<Complex> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  // max_{ij} |m_ij - conj(m_ji)|
  double hermiticity_deviation() const;
  // max_{ij} |m_ij - other_ij|; dimensions must agree.
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) {
    return lhs *= scale;
  }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) {
    return rhs *= scale;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Kronecker product a ⊗ b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { kFirst, kSecond };

// Partial trace of a bipartite operator on C^dim_first ⊗ C^dim_second.
// `traced` names the factor that is removed.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first,
                            std::size_t dim_second, Subsystem traced);

// Two-qubit convenience overload: dims (2,2).
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem traced);

inline constexpr double kJacobiOffDiagonalTarget = 1e-13;

// Eigenvalues of a Hermitian matrix, ascending. Uses cyclic Jacobi sweeps
// on the real symmetric embedding [[Re, -Im], [Im, Re]], whose spectrum is
// that of m with every eigenvalue doubled.
//
// Throws InvalidInput when m is not square or not Hermitian within 1e-9,
// NumericalFailure after 100 sweeps without reaching `tol`.
std::vector<double> hermitian_eigenvalues(
    const ComplexMatrix& m, double tol = kJacobiOffDiagonalTarget);

// Eigenvalues of a real symmetric n×n matrix (row-major), ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n,
                                          double tol = kJacobiOffDiagonalTarget);

// Singular values of a real 3×3 matrix as square roots of the eigenvalues of
// cᵀc, descending. Eigenvalues in (-1e-12, 0) are clamped to zero.
Vec3 symmetric3_singular_values(const Mat3& c);

// Bisection on [lo, hi]. Requires f(lo)·f(hi) <= 0; returns the midpoint once
// the bracket is narrower than tol. Throws BracketError otherwise, and
// InvalidInput for tol <= 0.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol);

}  // namespace qrelax
