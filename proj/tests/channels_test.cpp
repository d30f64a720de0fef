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

#include "seqwit/channels.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "seqwit/random_states.hpp"
#include "seqwit/states.hpp"
#include "test_support.hpp"

using namespace seqwit;
using seqwit::testing::error_code_of;

namespace {

double max_abs(const ComplexMatrix4 &m) { return m.cwiseAbs().maxCoeff(); }

const double kSharpnessGrid[] = {0.0, 1e-8, 1e-3, 0.1, 0.5, 0.9, 0.999, 1.0};

}  // namespace

TEST(unsharp_effects, completeness_and_positivity) {
    for (Axis axis : kAxes) {
        for (double lambda : kSharpnessGrid) {
            const EffectPair e = unsharp_effects({axis, lambda});
            EXPECT_LE((e.e0 + e.e1 - Matrix2::Identity()).cwiseAbs().maxCoeff(), 1e-15);
            const EffectPair r = sqrt_unsharp_effects({axis, lambda});
            EXPECT_LE((r.e0 * r.e0 - e.e0).cwiseAbs().maxCoeff(), 1e-15);
            EXPECT_LE((r.e1 * r.e1 - e.e1).cwiseAbs().maxCoeff(), 1e-15);
            EXPECT_LE((r.e0 - r.e0.adjoint()).cwiseAbs().maxCoeff(), 0.0);
        }
    }
}

TEST(unsharp_effects, sharp_limit_is_projective) {
    const EffectPair e = unsharp_effects({Axis::Z, 1.0});
    Matrix2 up = Matrix2::Zero();
    up(0, 0) = 1.0;
    EXPECT_EQ(e.e0, up);
    const EffectPair none = unsharp_effects({Axis::X, 0.0});
    EXPECT_EQ(none.e0, Matrix2::Identity() / 2.0);
}

TEST(validate_sharpness, rejects_out_of_range) {
    for (double bad : {-1e-12, 1.0 + 1e-12, std::nan(""), HUGE_VAL}) {
        EXPECT_EQ(error_code_of([&] { validate_sharpness(bad); }), ErrorCode::InvalidSharpness);
        EXPECT_EQ(error_code_of([&] { RoundPolicy{bad}; }), ErrorCode::InvalidSharpness);
        EXPECT_EQ(error_code_of([&] { unsharp_effects({Axis::X, bad}); }),
                  ErrorCode::InvalidSharpness);
    }
}

TEST(round_policy, z_is_always_sharp) {
    const RoundPolicy policy(0.3);
    EXPECT_EQ(policy.sharpness(Axis::X), 0.3);
    EXPECT_EQ(policy.sharpness(Axis::Y), 0.3);
    EXPECT_EQ(policy.sharpness(Axis::Z), 1.0);
}

TEST(luders_single, zero_sharpness_is_identity_map) {
    Rng rng(1);
    const DensityMatrix rho = random_density_matrix(rng);
    EXPECT_EQ(luders_single(rho, Side::A, {Axis::X, 0.0}).matrix(), rho.matrix());
}

TEST(luders_single, matches_dephasing_form) {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_density_matrix(rng);
        for (Side side : {Side::A, Side::B}) {
            for (Axis axis : kAxes) {
                for (double lambda : kSharpnessGrid) {
                    const ComplexMatrix4 got = luders_single(rho, side, {axis, lambda}).matrix();
                    EXPECT_LE(max_abs(got - oracle::dephase(rho.matrix(), side, axis, lambda)),
                              1e-14);
                }
            }
        }
    }
}

TEST(side_averaged_channel, pauli_transfer_law) {
    // Acting on side A multiplies every correlator T_ij by the factor of axis i,
    // and acting on B by the factor of axis j; local Bloch vectors scale the same way.
    Rng rng(23);
    for (double lambda : {0.0, 0.2, 0.7, 1.0}) {
        const Eigen::Vector3d f = oracle::transfer_factors(lambda);
        const RoundPolicy policy(lambda);
        for (int trial = 0; trial < 20; ++trial) {
            const DensityMatrix rho = random_density_matrix(rng);
            const HilbertSchmidtForm before = hs_decompose(rho);
            const HilbertSchmidtForm a = hs_decompose(side_averaged_channel(rho, Side::A, policy));
            const HilbertSchmidtForm b = hs_decompose(side_averaged_channel(rho, Side::B, policy));
            for (int i = 0; i < 3; ++i) {
                EXPECT_NEAR(a.a(i), f(i) * before.a(i), 1e-14);
                EXPECT_NEAR(a.b(i), before.b(i), 1e-14);
                EXPECT_NEAR(b.b(i), f(i) * before.b(i), 1e-14);
                EXPECT_NEAR(b.a(i), before.a(i), 1e-14);
                for (int j = 0; j < 3; ++j) {
                    EXPECT_NEAR(a.t(i, j), f(i) * before.t(i, j), 1e-14);
                    EXPECT_NEAR(b.t(i, j), f(j) * before.t(i, j), 1e-14);
                }
            }
        }
    }
}

TEST(pair_round, factorizes_into_commuting_sides) {
    Rng rng(31);
    for (double lambda : kSharpnessGrid) {
        const RoundPolicy policy(lambda);
        for (int trial = 0; trial < 20; ++trial) {
            const DensityMatrix rho = random_density_matrix(rng);
            const ComplexMatrix4 joint = pair_round(rho, policy).matrix();
            const ComplexMatrix4 ab =
                side_averaged_channel(side_averaged_channel(rho, Side::A, policy), Side::B, policy)
                    .matrix();
            const ComplexMatrix4 ba =
                side_averaged_channel(side_averaged_channel(rho, Side::B, policy), Side::A, policy)
                    .matrix();
            EXPECT_LE(max_abs(joint - ab), 1e-13);
            EXPECT_LE(max_abs(ab - ba), 1e-13);
        }
    }
}

TEST(pair_round, preserves_trace_and_positivity) {
    Rng rng(37);
    for (double lambda : kSharpnessGrid) {
        const RoundPolicy policy(lambda);
        for (int trial = 0; trial < 20; ++trial) {
            const DensityMatrix out = pair_round(random_density_matrix(rng), policy);
            EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-13);
            EXPECT_GE(hermitian_eigenvalues(out.matrix())[0], -1e-12);
        }
    }
}

TEST(pair_round, maximally_mixed_is_fixed_point) {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed();
    EXPECT_LE(max_abs(pair_round(mixed, RoundPolicy(0.6)).matrix() - mixed.matrix()), 1e-16);
}

TEST(pair_round, sharp_round_on_psi_plus) {
    // With every setting sharp each correlator keeps a third per side.
    const DensityMatrix out = pair_round(make_state(Maximal{}), RoundPolicy(1.0));
    EXPECT_NEAR(expectation(out, pauli_tensor(Axis::Z, Axis::Z)), -1.0 / 9.0, 1e-15);
    EXPECT_NEAR(expectation(out, pauli_tensor(Axis::X, Axis::X)), 1.0 / 9.0, 1e-15);
    EXPECT_NEAR(expectation(out, pauli_tensor(Axis::Y, Axis::Y)), 1.0 / 9.0, 1e-15);
}
