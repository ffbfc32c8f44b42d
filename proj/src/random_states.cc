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

#include "qrelax/random_states.h"

namespace qrelax {

BlochState random_bloch_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BlochState s;
  for (std::size_t i = 0; i < 3; ++i) {
    s.a[i] = u(rng);
    s.b[i] = u(rng);
    for (std::size_t j = 0; j < 3; ++j) s.c[i][j] = u(rng);
  }
  return s;
}

DensityMatrix random_density_matrix(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) g(r, c) = Complex(n(rng), n(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Exact Hermitian symmetrization.
  for (std::size_t r = 0; r < 4; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < 4; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_x_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> phase(-3.141592653589793, 3.141592653589793);
  std::array<double, 4> w{};
  double total = 0.0;
  for (double& x : w) {
    x = u(rng) + 1e-3;
    total += x;
  }
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = w[i] / total;
  const Complex c14 = std::polar(0.5 * u(rng), phase(rng));
  const Complex c23 = std::polar(0.5 * u(rng), phase(rng));
  m(0, 3) = c14;
  m(3, 0) = std::conj(c14);
  m(1, 2) = c23;
  m(2, 1) = std::conj(c23);
  return DensityMatrix(std::move(m));
}

ChannelParams random_channel_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> time(0.2, 5.0);
  std::uniform_real_distribution<double> eq(-1.0, 1.0);
  const double t1a = time(rng), t2a = time(rng), t1b = time(rng), t2b = time(rng);
  const double s = eq(rng), t = eq(rng);
  return ChannelParams(t1a, t2a, t1b, t2b, s, t);
}

ChannelParams random_channel_params(std::mt19937_64& rng, double alpha_lo,
                                    double alpha_hi) {
  std::uniform_real_distribution<double> time(0.2, 5.0);
  std::uniform_real_distribution<double> ratio(alpha_lo, alpha_hi);
  std::uniform_real_distribution<double> eq(-1.0, 1.0);
  const double t2a = time(rng), t2b = time(rng);
  const double aa = ratio(rng), ab = ratio(rng);
  const double s = eq(rng), t = eq(rng);
  return ChannelParams(aa * t2a, t2a, ab * t2b, t2b, s, t);
}

}  // namespace qrelax
