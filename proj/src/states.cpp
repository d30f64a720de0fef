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

#include "seqwit/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "overloaded.hpp"
#include "seqwit/errors.hpp"

namespace seqwit {

using detail::overloaded;

namespace {

constexpr double kProbabilitySumTolerance = 1e-12;

[[noreturn]] void reject(const std::string &message) {
    throw Error(ErrorCode::InvalidFamilyParams, message);
}

std::string str(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

void validate_alpha_half(double alpha, const char *family) {
    if (!(alpha > 0.0 && alpha <= 0.5)) {
        reject(std::string(family) + ": alpha must lie in (0, 1/2], got " + str(alpha));
    }
}

StateVector4 psi_alpha(double alpha) {
    StateVector4 psi = StateVector4::Zero();
    psi(1) = std::sqrt(alpha);
    psi(2) = std::sqrt(1.0 - alpha);
    return psi;
}

}  // namespace

std::string family_name(const FamilySpec &spec) {
    return std::visit(overloaded{
                          [](const Maximal &) { return std::string("maximal"); },
                          [](const PureAlpha &) { return std::string("pure"); },
                          [](const MixedClass &) { return std::string("mixed"); },
                          [](const Weak &) { return std::string("weak"); },
                      },
                      spec);
}

double weak_alpha_boundary(double theta) {
    return (1.0 - std::cos(theta)) / (2.0 * std::sin(theta));
}

void validate(const FamilySpec &spec) {
    std::visit(overloaded{
                   [](const Maximal &) {},
                   [](const PureAlpha &f) { validate_alpha_half(f.alpha, "pure"); },
                   [](const MixedClass &f) {
                       if (!(f.p1 > 0.0)) reject("mixed: p1 must be > 0, got " + str(f.p1));
                       if (!(f.p2 >= 0.0)) reject("mixed: p2 must be >= 0, got " + str(f.p2));
                       if (!(f.p3 >= 0.0)) reject("mixed: p3 must be >= 0, got " + str(f.p3));
                       const double total = f.p1 + f.p2 + f.p3;
                       if (!(std::abs(total - 1.0) <= kProbabilitySumTolerance)) {
                           reject("mixed: p1 + p2 + p3 must equal 1, got " + str(total));
                       }
                       validate_alpha_half(f.alpha, "mixed");
                   },
                   [](const Weak &f) {
                       if (!(f.theta > 0.0 && f.theta <= std::numbers::pi / 4.0)) {
                           reject("weak: theta must lie in (0, pi/4], got " + str(f.theta));
                       }
                       const double boundary = weak_alpha_boundary(f.theta);
                       if (!(f.alpha > boundary && f.alpha <= 1.0)) {
                           reject("weak: alpha must lie in ((1 - cos theta) / (2 sin theta), 1] = (" +
                                  str(boundary) + ", 1], got " + str(f.alpha));
                       }
                   },
               },
               spec);
}

DensityMatrix make_state(const FamilySpec &spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [](const Maximal &) { return DensityMatrix::from_pure(psi_alpha(0.5)); },
            [](const PureAlpha &f) { return DensityMatrix::from_pure(psi_alpha(f.alpha)); },
            [](const MixedClass &f) {
                const StateVector4 psi = psi_alpha(f.alpha);
                ComplexMatrix4 m = f.p1 * (psi * psi.adjoint());
                m(1, 1) += f.p2;
                m(2, 2) += f.p3;
                return DensityMatrix::from_matrix(m);
            },
            [](const Weak &f) {
                const double transverse = f.alpha * std::sin(f.theta);
                const ComplexMatrix4 m =
                    (ComplexMatrix4::Identity() -
                     std::cos(f.theta) * pauli_tensor(Axis::Z, Axis::Z) +
                     transverse * pauli_tensor(Axis::X, Axis::X) +
                     transverse * pauli_tensor(Axis::Y, Axis::Y)) /
                    4.0;
                return DensityMatrix::from_matrix(m);
            },
        },
        spec);
}

InitialCorrelators initial_correlators(const FamilySpec &spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [](const Maximal &) { return InitialCorrelators{-1.0, 2.0}; },
            [](const PureAlpha &f) {
                return InitialCorrelators{-1.0, 4.0 * std::sqrt(f.alpha * (1.0 - f.alpha))};
            },
            [](const MixedClass &f) {
                return InitialCorrelators{-1.0,
                                          4.0 * f.p1 * std::sqrt(f.alpha * (1.0 - f.alpha))};
            },
            [](const Weak &f) {
                return InitialCorrelators{-std::cos(f.theta),
                                          2.0 * f.alpha * std::sin(f.theta)};
            },
        },
        spec);
}

}  // namespace seqwit
