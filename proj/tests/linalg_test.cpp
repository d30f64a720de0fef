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

#include "seqwit/linalg.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "gtest/gtest.h"
#include "seqwit/random_states.hpp"
#include "test_support.hpp"

using namespace seqwit;
using seqwit::testing::error_code_of;

namespace {

DensityMatrix psi_plus() {
    StateVector4 v = StateVector4::Zero();
    v(1) = v(2) = 1.0 / std::sqrt(2.0);
    return DensityMatrix::from_pure(v);
}

ComplexMatrix4 random_hermitian(Rng &rng) {
    std::normal_distribution<double> normal;
    ComplexMatrix4 g;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return (g + g.adjoint()) / 2.0;
}

}  // namespace

TEST(pauli, z_eigenbasis_is_computational) {
    Eigen::Matrix<Complex, 2, 1> zero(1.0, 0.0);
    EXPECT_EQ(pauli(Axis::Z) * zero, zero);
    Eigen::Matrix<Complex, 2, 1> one(0.0, 1.0);
    EXPECT_EQ(pauli(Axis::Z) * one, -one);
}

TEST(pauli, involution_and_traceless) {
    for (Axis axis : kAxes) {
        EXPECT_EQ(pauli(axis) * pauli(axis), Matrix2::Identity());
        EXPECT_EQ(pauli(axis).trace(), Complex(0.0));
    }
    // sigma_x sigma_y = i sigma_z
    EXPECT_EQ(pauli(Axis::X) * pauli(Axis::Y), Complex(0.0, 1.0) * pauli(Axis::Z));
}

TEST(pauli_tensor, zz_is_diagonal) {
    ComplexMatrix4 expected = ComplexMatrix4::Zero();
    expected.diagonal() << 1.0, -1.0, -1.0, 1.0;
    EXPECT_EQ(pauli_tensor(Axis::Z, Axis::Z), expected);
}

TEST(pauli_tensor, traceless_involutions) {
    EXPECT_EQ(pauli_tensor(Axis::X, Axis::Y).trace(), Complex(0.0));
    for (Axis i : kAxes) {
        for (Axis j : kAxes) {
            EXPECT_EQ(pauli_tensor(i, j) * pauli_tensor(i, j), ComplexMatrix4::Identity());
        }
    }
}

TEST(pauli_tensor, side_a_is_left_factor) {
    // sigma_z (x) I flips sign on |10>, |11>.
    const ComplexMatrix4 za = local_operator(Side::A, pauli(Axis::Z));
    EXPECT_EQ(za(0, 0), Complex(1.0));
    EXPECT_EQ(za(1, 1), Complex(1.0));
    EXPECT_EQ(za(2, 2), Complex(-1.0));
    const ComplexMatrix4 zb = local_operator(Side::B, pauli(Axis::Z));
    EXPECT_EQ(zb(1, 1), Complex(-1.0));
    EXPECT_EQ(zb(2, 2), Complex(1.0));
}

TEST(density_matrix, rejects_invalid_operators) {
    ComplexMatrix4 m = ComplexMatrix4::Identity() / 4.0;
    m(0, 1) = 0.1;
    EXPECT_EQ(error_code_of([&] { DensityMatrix::from_matrix(m); }), ErrorCode::InvalidState);

    EXPECT_EQ(error_code_of([] { DensityMatrix::from_matrix(ComplexMatrix4::Identity() / 2.0); }),
              ErrorCode::InvalidState);

    ComplexMatrix4 negative = ComplexMatrix4::Zero();
    negative.diagonal() << 0.6, 0.6, -0.1, -0.1;
    EXPECT_EQ(error_code_of([&] { DensityMatrix::from_matrix(negative); }), ErrorCode::InvalidState);

    ComplexMatrix4 nan = ComplexMatrix4::Identity() / 4.0;
    nan(3, 3) = std::nan("");
    EXPECT_EQ(error_code_of([&] { DensityMatrix::from_matrix(nan); }), ErrorCode::InvalidState);
}

TEST(density_matrix, accepts_psd_noise_within_tolerance) {
    ComplexMatrix4 m = ComplexMatrix4::Zero();
    m.diagonal() << 0.5 + 5e-10, 0.5, 0.0, -5e-10;
    EXPECT_NO_THROW(DensityMatrix::from_matrix(m));
}

TEST(expectation, psi_plus_correlators) {
    const DensityMatrix rho = psi_plus();
    EXPECT_NEAR(expectation(rho, pauli_tensor(Axis::Z, Axis::Z)), -1.0, 1e-15);
    EXPECT_NEAR(expectation(rho, pauli_tensor(Axis::X, Axis::X)), 1.0, 1e-15);
    EXPECT_NEAR(expectation(rho, pauli_tensor(Axis::Y, Axis::Y)), 1.0, 1e-15);
    EXPECT_NEAR(expectation(rho, ComplexMatrix4::Identity()), 1.0, 1e-15);
}

TEST(expectation, identity_on_random_states) {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        EXPECT_NEAR(expectation(random_density_matrix(rng), ComplexMatrix4::Identity()), 1.0, 1e-12);
    }
}

TEST(expectation, rejects_non_hermitian_observable) {
    ComplexMatrix4 op = ComplexMatrix4::Zero();
    op(0, 1) = 1.0;
    EXPECT_EQ(error_code_of([&] { expectation(psi_plus(), op); }), ErrorCode::NonHermitianOperator);
}

TEST(partial_transpose, product_state) {
    Rng rng(11);
    const auto a = random_qubit(rng);
    const auto b = random_qubit(rng);
    const Matrix2 rho_a = a * a.adjoint();
    const Matrix2 rho_b = b * b.adjoint();
    const DensityMatrix rho = DensityMatrix::from_matrix(kron(rho_a, rho_b));
    const ComplexMatrix4 pt = partial_transpose(rho, Side::A);
    EXPECT_LE((pt - kron(rho_a.transpose(), rho_b)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_GE(hermitian_eigenvalues(pt)[0], -1e-12);
}

TEST(partial_transpose, psi_plus_spectrum) {
    for (Side side : {Side::A, Side::B}) {
        const auto values = hermitian_eigenvalues(partial_transpose(psi_plus(), side));
        EXPECT_NEAR(values[0], -0.5, 1e-14);
        EXPECT_NEAR(values[1], 0.5, 1e-14);
        EXPECT_NEAR(values[2], 0.5, 1e-14);
        EXPECT_NEAR(values[3], 0.5, 1e-14);
    }
}

TEST(partial_transpose, involution_trace_hermiticity_and_side_symmetry) {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix rho = random_density_matrix(rng);
        for (Side side : {Side::A, Side::B}) {
            const ComplexMatrix4 pt = partial_transpose(rho, side);
            EXPECT_EQ(partial_transpose(pt, side), rho.matrix());
            EXPECT_EQ(pt.trace(), rho.matrix().trace());
            EXPECT_EQ(hermiticity_defect(pt), hermiticity_defect(rho.matrix()));
        }
        const auto a = hermitian_eigenvalues(partial_transpose(rho, Side::A));
        const auto b = hermitian_eigenvalues(partial_transpose(rho, Side::B));
        for (int k = 0; k < 4; ++k) EXPECT_NEAR(a[k], b[k], 1e-12);
    }
}

TEST(hermitian_eigenvalues, simple_cases) {
    const auto mixed = hermitian_eigenvalues(ComplexMatrix4::Identity() / 4.0);
    for (double v : mixed) EXPECT_DOUBLE_EQ(v, 0.25);

    const auto zz = hermitian_eigenvalues(pauli_tensor(Axis::Z, Axis::Z));
    EXPECT_EQ(zz, (std::array<double, 4>{-1.0, -1.0, 1.0, 1.0}));
}

TEST(hermitian_eigenvalues, witness_for_psi_plus_matches_bell_basis) {
    // 1/4 [I + ZZ - XX - YY] is diagonal in the Bell basis with
    // eigenvalue -1/2 on |psi+> and 1/2 elsewhere.
    const ComplexMatrix4 w = (ComplexMatrix4::Identity() + pauli_tensor(Axis::Z, Axis::Z) -
                              pauli_tensor(Axis::X, Axis::X) - pauli_tensor(Axis::Y, Axis::Y)) /
                             4.0;
    const auto values = hermitian_eigenvalues(w);
    EXPECT_NEAR(values[0], -0.5, 1e-15);
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(values[k], 0.5, 1e-15);
}

TEST(hermitian_eigensystem, random_hermitian_reconstruction_and_residuals) {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexMatrix4 m = random_hermitian(rng);
        const auto system = hermitian_eigensystem<4>(m);
        const ComplexMatrix4 rebuilt = system.vectors *
                                       system.values.cast<Complex>().asDiagonal() *
                                       system.vectors.adjoint();
        EXPECT_LE((m - rebuilt).norm(), 1e-10);
        for (int k = 0; k < 4; ++k) {
            const auto v = system.vectors.col(k);
            EXPECT_LE((m * v - system.values(k) * v).norm(), 1e-10);
        }
        EXPECT_NEAR(system.values.sum(), m.trace().real(), 1e-10);
        for (int k = 0; k + 1 < 4; ++k) EXPECT_LE(system.values(k), system.values(k + 1));

        // Independent solver as oracle.
        Eigen::SelfAdjointEigenSolver<ComplexMatrix4> reference(m);
        for (int k = 0; k < 4; ++k) EXPECT_NEAR(system.values(k), reference.eigenvalues()(k), 1e-12);
    }
}

TEST(hermitian_eigensystem, three_by_three_real_symmetric) {
    Eigen::Matrix<Complex, 3, 3> m;
    m << 2.0, 1.0, 0.0, 1.0, 2.0, 0.0, 0.0, 0.0, 5.0;
    const auto system = hermitian_eigensystem<3>(m);
    EXPECT_NEAR(system.values(0), 1.0, 1e-14);
    EXPECT_NEAR(system.values(1), 3.0, 1e-14);
    EXPECT_NEAR(system.values(2), 5.0, 1e-14);
}

TEST(hermitian_eigensystem, error_paths) {
    ComplexMatrix4 skew = ComplexMatrix4::Zero();
    skew(0, 1) = 1.0;
    EXPECT_EQ(error_code_of([&] { hermitian_eigenvalues(skew); }), ErrorCode::NonHermitianOperator);

    const ComplexMatrix4 x = pauli_tensor(Axis::X, Axis::X);
    EXPECT_EQ(error_code_of([&] { hermitian_eigensystem<4>(x, JacobiOptions{1e-14, 0}); }),
              ErrorCode::NoConvergence);
}

TEST(hilbert_schmidt, psi_plus_and_maximally_mixed) {
    const HilbertSchmidtForm f = hs_decompose(psi_plus());
    EXPECT_LE(f.a.cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE(f.b.cwiseAbs().maxCoeff(), 1e-15);
    Eigen::Matrix3d expected = Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal();
    EXPECT_LE((f.t - expected).cwiseAbs().maxCoeff(), 1e-15);

    const HilbertSchmidtForm mixed = hs_decompose(DensityMatrix::maximally_mixed());
    EXPECT_EQ(mixed.t, Eigen::Matrix3d::Zero());
    EXPECT_EQ(mixed.a, Eigen::Vector3d::Zero());
}

TEST(hilbert_schmidt, round_trip_on_random_states) {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const DensityMatrix rho = random_density_matrix(rng);
        const HilbertSchmidtForm f = hs_decompose(rho);
        EXPECT_LE((hs_compose(f).matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LE(f.t.cwiseAbs().maxCoeff(), 1.0 + 1e-12);
        EXPECT_LE(f.a.cwiseAbs().maxCoeff(), 1.0 + 1e-12);
        EXPECT_LE(f.b.cwiseAbs().maxCoeff(), 1.0 + 1e-12);
    }
}

TEST(hilbert_schmidt, compose_rejects_non_states) {
    HilbertSchmidtForm f;
    f.t = Eigen::Vector3d(1.0, 1.0, 1.0).asDiagonal();
    // 1/4 (I + XX + YY + ZZ) has eigenvalue -1/2.
    EXPECT_EQ(error_code_of([&] { hs_compose(f); }), ErrorCode::InvalidState);
    EXPECT_NO_THROW(hs_operator(f));
}
