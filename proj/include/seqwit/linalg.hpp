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

#include <array>
#include <complex>

#include <Eigen/Dense>

/// Fixed-size linear algebra for two-qubit states.
///
/// Basis order is |00>, |01>, |10>, |11> everywhere, i.e. row/column index
/// 2*a + b for qubit A in state a and qubit B in state b. Side A is always the
/// left Kronecker factor.
namespace seqwit {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
using ComplexMatrix4 = Eigen::Matrix<Complex, 4, 4>;
using StateVector4 = Eigen::Matrix<Complex, 4, 1>;

enum class Axis { X, Y, Z };
inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

enum class Side { A, B };

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-9;

char axis_name(Axis axis);

Matrix2 pauli(Axis axis);
ComplexMatrix4 kron(const Matrix2 &left, const Matrix2 &right);
/// sigma_i (x) sigma_j.
ComplexMatrix4 pauli_tensor(Axis i, Axis j);
/// op (x) I for side A, I (x) op for side B.
ComplexMatrix4 local_operator(Side side, const Matrix2 &op);

/// Largest entrywise |M - M^dagger|.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived> &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// A validated two-qubit density operator: Hermitian, unit trace and positive
/// semidefinite up to the tolerances above. Immutable after construction.
class DensityMatrix {
   public:
    /// Throws Error(InvalidState) naming the first violated property.
    static DensityMatrix from_matrix(const ComplexMatrix4 &m);
    static DensityMatrix from_pure(const StateVector4 &psi);
    static DensityMatrix maximally_mixed();

    const ComplexMatrix4 &matrix() const noexcept { return m_; }
    Complex operator()(int row, int col) const { return m_(row, col); }

   private:
    explicit DensityMatrix(const ComplexMatrix4 &m) : m_(m) {}
    ComplexMatrix4 m_;
};

/// Tr[O rho]. Throws NonHermitianOperator if O is not Hermitian within 1e-12.
double expectation(const DensityMatrix &rho, const ComplexMatrix4 &op);

/// Transpose of the chosen tensor factor. Pure index rearrangement, so trace
/// and Hermiticity are preserved exactly.
ComplexMatrix4 partial_transpose(const ComplexMatrix4 &m, Side side);
ComplexMatrix4 partial_transpose(const DensityMatrix &rho, Side side);

struct JacobiOptions {
    /// Convergence when the off-diagonal Frobenius norm falls below
    /// tolerance * max(1, ||M||_F).
    double tolerance = 1e-14;
    int max_sweeps = 50;
};

template <int N>
struct HermitianEigensystem {
    /// Ascending.
    Eigen::Matrix<double, N, 1> values;
    /// Column k is the unit eigenvector for values[k].
    Eigen::Matrix<Complex, N, N> vectors;
};

/// Cyclic complex Jacobi diagonalization. Throws NonHermitianOperator when the
/// input is not Hermitian within 1e-12 and NoConvergence when the sweep budget
/// runs out.
template <int N>
HermitianEigensystem<N> hermitian_eigensystem(const Eigen::Matrix<Complex, N, N> &m,
                                              const JacobiOptions &options = {});

extern template HermitianEigensystem<3> hermitian_eigensystem<3>(
    const Eigen::Matrix<Complex, 3, 3> &, const JacobiOptions &);
extern template HermitianEigensystem<4> hermitian_eigensystem<4>(
    const Eigen::Matrix<Complex, 4, 4> &, const JacobiOptions &);

std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4 &m);

/// rho = 1/4 [ I + sum_m a_m s_m (x) I + sum_n b_n I (x) s_n
///             + sum_mn t_mn s_m (x) s_n ]
struct HilbertSchmidtForm {
    Eigen::Vector3d a = Eigen::Vector3d::Zero();
    Eigen::Vector3d b = Eigen::Vector3d::Zero();
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

HilbertSchmidtForm hs_decompose(const DensityMatrix &rho);
/// The operator described by the form, without any state validation.
ComplexMatrix4 hs_operator(const HilbertSchmidtForm &form);
/// Throws InvalidState if the operator is not a valid density matrix.
DensityMatrix hs_compose(const HilbertSchmidtForm &form);

}  // namespace seqwit
