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
#include <string>

#include "qrelax/errors.h"

namespace qrelax {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
    throw InvalidInput("matrix dimensions must be in [1, 8], got " +
                       std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> values)
    : ComplexMatrix(rows, cols) {
  if (values.size() != rows * cols) {
    throw InvalidInput("initializer size does not match matrix dimensions");
  }
  std::copy(values.begin(), values.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  std::size_t i = 0;
  for (const auto& v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_deviation() const {
  if (!is_square()) return INFINITY;
  double dev = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return dev;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InvalidInput("max_abs_diff: dimension mismatch");
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    dev = std::max(dev, std::abs(data_[i] - other.data_[i]));
  return dev;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidInput("matrix sum: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InvalidInput("matrix difference: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw InvalidInput("matrix product: dimension mismatch");
  ComplexMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first,
                            std::size_t dim_second, Subsystem traced) {
  const std::size_t n = dim_first * dim_second;
  if (m.rows() != n || m.cols() != n) {
    throw InvalidInput("partial_trace: matrix is not " + std::to_string(n) +
                       "x" + std::to_string(n));
  }
  if (traced == Subsystem::kSecond) {
    ComplexMatrix out(dim_first, dim_first);
    for (std::size_t i = 0; i < dim_first; ++i)
      for (std::size_t k = 0; k < dim_first; ++k)
        for (std::size_t j = 0; j < dim_second; ++j)
          out(i, k) += m(i * dim_second + j, k * dim_second + j);
    return out;
  }
  ComplexMatrix out(dim_second, dim_second);
  for (std::size_t j = 0; j < dim_second; ++j)
    for (std::size_t l = 0; l < dim_second; ++l)
      for (std::size_t i = 0; i < dim_first; ++i)
        out(j, l) += m(i * dim_second + j, i * dim_second + l);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem traced) {
  return partial_trace(m, 2, 2, traced);
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n,
                                          double tol) {
  if (a.size() != n * n) throw InvalidInput("symmetric_eigenvalues: size mismatch");
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) s += at(r, c) * at(r, c);
    return std::sqrt(2.0 * s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm() >= tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Classic Jacobi rotation annihilating a_pq.
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  if (off_norm() >= tol) {
    throw NumericalFailure("Jacobi eigensolver did not converge in 100 sweeps");
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::stable_sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw InvalidInput("hermitian_eigenvalues: matrix is not square");
  if (m.hermiticity_deviation() > 1e-9) {
    throw InvalidInput("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const std::size_t n = m.rows();
  const std::size_t n2 = 2 * n;
  std::vector<double> real(n2 * n2);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // Symmetrize so tiny Hermiticity defects do not break the embedding.
      const Complex h = 0.5 * (m(r, c) + std::conj(m(c, r)));
      real[r * n2 + c] = h.real();
      real[(r + n) * n2 + (c + n)] = h.real();
      real[r * n2 + (c + n)] = -h.imag();
      real[(r + n) * n2 + c] = h.imag();
    }
  }
  const std::vector<double> doubled = symmetric_eigenvalues(std::move(real), n2, tol);
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return eig;
}

Vec3 symmetric3_singular_values(const Mat3& c) {
  std::vector<double> ctc(9, 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) ctc[i * 3 + j] += c[k][i] * c[k][j];
  const std::vector<double> eig = symmetric_eigenvalues(std::move(ctc), 3);
  Vec3 sv{};
  for (std::size_t i = 0; i < 3; ++i) {
    double e = eig[2 - i];
    if (e < 0.0 && e > -1e-12) e = 0.0;
    sv[i] = std::sqrt(e);
  }
  return sv;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol) {
  if (!(tol > 0.0)) throw InvalidInput("bisect: tolerance must be > 0");
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo * fhi > 0.0) {
    throw BracketError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  while (std::abs(hi - lo) >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fmid = f(mid);
    if ((fmid > 0.0) == (flo > 0.0) && fmid != 0.0) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qrelax
