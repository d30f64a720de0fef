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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "seqwit/errors.hpp"

namespace seqwit {

namespace {

constexpr Complex kI{0.0, 1.0};

template <int N>
double off_diagonal_norm(const Eigen::Matrix<Complex, N, N> &a) {
    double sum = 0.0;
    for (int p = 0; p < N; ++p) {
        for (int q = 0; q < N; ++q) {
            if (p != q) sum += std::norm(a(p, q));
        }
    }
    return std::sqrt(sum);
}

}  // namespace

char axis_name(Axis axis) {
    switch (axis) {
        case Axis::X:
            return 'x';
        case Axis::Y:
            return 'y';
        case Axis::Z:
            return 'z';
    }
    return '?';
}

Matrix2 pauli(Axis axis) {
    Matrix2 s;
    switch (axis) {
        case Axis::X:
            s << 0.0, 1.0, 1.0, 0.0;
            break;
        case Axis::Y:
            s << 0.0, -kI, kI, 0.0;
            break;
        case Axis::Z:
            s << 1.0, 0.0, 0.0, -1.0;
            break;
    }
    return s;
}

ComplexMatrix4 kron(const Matrix2 &left, const Matrix2 &right) {
    ComplexMatrix4 out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                    out(2 * a + c, 2 * b + d) = left(a, b) * right(c, d);
                }
            }
        }
    }
    return out;
}

ComplexMatrix4 pauli_tensor(Axis i, Axis j) { return kron(pauli(i), pauli(j)); }

ComplexMatrix4 local_operator(Side side, const Matrix2 &op) {
    return side == Side::A ? kron(op, Matrix2::Identity()) : kron(Matrix2::Identity(), op);
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix4 &m) {
    if (!m.allFinite()) {
        throw Error(ErrorCode::InvalidState, "matrix has non-finite entries");
    }
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian (max |M - M^dagger| = " << defect << ")";
        throw Error(ErrorCode::InvalidState, msg.str());
    }
    const double trace = m.trace().real();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "trace is " << trace << ", expected 1";
        throw Error(ErrorCode::InvalidState, msg.str());
    }
    const double min_eigenvalue = hermitian_eigenvalues(m)[0];
    if (min_eigenvalue < -kPsdTolerance) {
        std::ostringstream msg;
        msg << "matrix is not positive semidefinite (min eigenvalue " << min_eigenvalue << ")";
        throw Error(ErrorCode::InvalidState, msg.str());
    }
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_pure(const StateVector4 &psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(ErrorCode::InvalidState, "state vector has zero or non-finite norm");
    }
    const StateVector4 unit = psi / norm;
    return from_matrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(ComplexMatrix4::Identity() / 4.0);
}

double expectation(const DensityMatrix &rho, const ComplexMatrix4 &op) {
    const double defect = hermiticity_defect(op);
    if (defect > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "observable is not Hermitian (max |O - O^dagger| = " << defect << ")";
        throw Error(ErrorCode::NonHermitianOperator, msg.str());
    }
    // Tr[O rho] without forming the product.
    Complex sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) sum += op(i, j) * rho(j, i);
    }
    return sum.real();
}

ComplexMatrix4 partial_transpose(const ComplexMatrix4 &m, Side side) {
    ComplexMatrix4 out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int a2 = 0; a2 < 2; ++a2) {
                for (int b2 = 0; b2 < 2; ++b2) {
                    const Complex value = m(2 * a + b, 2 * a2 + b2);
                    if (side == Side::A) {
                        out(2 * a2 + b, 2 * a + b2) = value;
                    } else {
                        out(2 * a + b2, 2 * a2 + b) = value;
                    }
                }
            }
        }
    }
    return out;
}

ComplexMatrix4 partial_transpose(const DensityMatrix &rho, Side side) {
    return partial_transpose(rho.matrix(), side);
}

template <int N>
HermitianEigensystem<N> hermitian_eigensystem(const Eigen::Matrix<Complex, N, N> &m,
                                              const JacobiOptions &options) {
    using Matrix = Eigen::Matrix<Complex, N, N>;
    const double defect = hermiticity_defect(m);
    if (!(defect <= kHermitianTolerance)) {
        std::ostringstream msg;
        msg << "eigen-solver input is not Hermitian (max |M - M^dagger| = " << defect << ")";
        throw Error(ErrorCode::NonHermitianOperator, msg.str());
    }

    Matrix a = (m + m.adjoint()) / 2.0;
    Matrix v = Matrix::Identity();
    const double threshold = options.tolerance * std::max(1.0, a.norm());

    for (int sweep = 0;; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) break;
        if (sweep == options.max_sweeps) {
            std::ostringstream msg;
            msg << "Jacobi iteration did not converge in " << options.max_sweeps << " sweeps";
            throw Error(ErrorCode::NoConvergence, msg.str());
        }
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                // Phase-rotate q so the pivot is real, then apply the real
                // symmetric Jacobi rotation.
                const Complex phase = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                Matrix g = Matrix::Identity();
                g(p, p) = c;
                g(p, q) = s;
                g(q, p) = -s * std::conj(phase);
                g(q, q) = c * std::conj(phase);

                a = (g.adjoint() * a * g).eval();
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < N; ++k) a(k, k) = a(k, k).real();
                v = (v * g).eval();
            }
        }
    }

    std::array<int, N> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigensystem<N> out;
    for (int k = 0; k < N; ++k) {
        out.values(k) = a(order[k], order[k]).real();
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

template HermitianEigensystem<3> hermitian_eigensystem<3>(const Eigen::Matrix<Complex, 3, 3> &,
                                                          const JacobiOptions &);
template HermitianEigensystem<4> hermitian_eigensystem<4>(const Eigen::Matrix<Complex, 4, 4> &,
                                                          const JacobiOptions &);

std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4 &m) {
    const auto system = hermitian_eigensystem<4>(m);
    return {system.values(0), system.values(1), system.values(2), system.values(3)};
}

HilbertSchmidtForm hs_decompose(const DensityMatrix &rho) {
    HilbertSchmidtForm form;
    for (int m = 0; m < 3; ++m) {
        const Matrix2 sm = pauli(kAxes[m]);
        form.a(m) = expectation(rho, local_operator(Side::A, sm));
        form.b(m) = expectation(rho, local_operator(Side::B, sm));
        for (int n = 0; n < 3; ++n) {
            form.t(m, n) = expectation(rho, pauli_tensor(kAxes[m], kAxes[n]));
        }
    }
    return form;
}

ComplexMatrix4 hs_operator(const HilbertSchmidtForm &form) {
    ComplexMatrix4 out = ComplexMatrix4::Identity();
    for (int m = 0; m < 3; ++m) {
        const Matrix2 sm = pauli(kAxes[m]);
        out += form.a(m) * local_operator(Side::A, sm);
        out += form.b(m) * local_operator(Side::B, sm);
        for (int n = 0; n < 3; ++n) {
            out += form.t(m, n) * pauli_tensor(kAxes[m], kAxes[n]);
        }
    }
    return out / 4.0;
}

DensityMatrix hs_compose(const HilbertSchmidtForm &form) {
    return DensityMatrix::from_matrix(hs_operator(form));
}

}  // namespace seqwit
