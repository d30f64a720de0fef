// Copyright 2026 The seqwit Authors
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

#include "seqwit/linalg.hpp"

/// Seeded generators for test and acceptance inputs.
namespace seqwit {

using Rng = std::mt19937_64;

/// Haar-random pure qubit state as a 2-vector.
Eigen::Matrix<Complex, 2, 1> random_qubit(Rng &rng);

/// rho = G G^dagger / Tr with G a 4 x r complex Ginibre matrix, r uniform in 1..4.
DensityMatrix random_density_matrix(Rng &rng);

/// Convex mixture of 1..max_terms random product pure states.
DensityMatrix random_separable_state(Rng &rng, int max_terms = 4);

}  // namespace seqwit
