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

#include <random>

#include "qrelax/channel.h"
#include "qrelax/qstate.h"

namespace qrelax {

// Seeded generators shared by the validation report and the test suites.

// Entries uniform in [-1, 1]; generally unphysical.
BlochState random_bloch_state(std::mt19937_64& rng);

// G G† / Tr(G G†) with complex Gaussian G.
DensityMatrix random_density_matrix(std::mt19937_64& rng);

// Hermitian, unit trace, nonzero only on the diagonal and anti-diagonal.
// Diagonal is a random probability vector; coherences are complex with
// modulus up to 0.5, so the matrix need not be positive.
DensityMatrix random_x_state(std::mt19937_64& rng);

// Relaxation times in [0.2, 5], equilibria in [-1, 1].
ChannelParams random_channel_params(std::mt19937_64& rng);

// As above with both alpha = T1/T2 drawn from [alpha_lo, alpha_hi].
ChannelParams random_channel_params(std::mt19937_64& rng, double alpha_lo,
                                    double alpha_hi);

}  // namespace qrelax
