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

#include "seqwit/random_states.hpp"

#include <vector>

namespace seqwit {

namespace {

Complex gaussian_complex(Rng &rng) {
    std::normal_distribution<double> normal;
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

}  // namespace

Eigen::Matrix<Complex, 2, 1> random_qubit(Rng &rng) {
    Eigen::Matrix<Complex, 2, 1> v;
    v(0) = gaussian_complex(rng);
    v(1) = gaussian_complex(rng);
    return v / v.norm();
}

DensityMatrix random_density_matrix(Rng &rng) {
    std::uniform_int_distribution<int> rank_dist(1, 4);
    const int rank = rank_dist(rng);
    Eigen::Matrix<Complex, 4, Eigen::Dynamic> g(4, rank);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < rank; ++j) g(i, j) = gaussian_complex(rng);
    }
    ComplexMatrix4 m = g * g.adjoint();
    m /= m.trace().real();
    m = (m + m.adjoint()).eval() / 2.0;
    return DensityMatrix::from_matrix(m);
}

DensityMatrix random_separable_state(Rng &rng, int max_terms) {
    std::uniform_int_distribution<int> terms_dist(1, max_terms);
    std::uniform_real_distribution<double> weight_dist(0.0, 1.0);
    const int terms = terms_dist(rng);

    std::vector<double> weights(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (double &w : weights) {
        w = weight_dist(rng) + 1e-3;
        total += w;
    }

    ComplexMatrix4 m = ComplexMatrix4::Zero();
    for (double w : weights) {
        const auto a = random_qubit(rng);
        const auto b = random_qubit(rng);
        StateVector4 product;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) product(2 * i + j) = a(i) * b(j);
        }
        m += (w / total) * (product * product.adjoint());
    }
    return DensityMatrix::from_matrix(m);
}

}  // namespace seqwit
