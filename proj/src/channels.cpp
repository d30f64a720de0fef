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

#include <array>
#include <cmath>
#include <sstream>

#include "seqwit/errors.hpp"

namespace seqwit {

namespace {

ComplexMatrix4 luders_unchecked(const ComplexMatrix4 &rho, Side side,
                                const UnsharpSetting &setting) {
    if (setting.sharpness == 0.0) return rho;
    const EffectPair roots = sqrt_unsharp_effects(setting);
    const ComplexMatrix4 k0 = local_operator(side, roots.e0);
    const ComplexMatrix4 k1 = local_operator(side, roots.e1);
    return k0 * rho * k0 + k1 * rho * k1;
}

}  // namespace

void validate_sharpness(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "sharpness must lie in [0, 1], got " << lambda;
        throw Error(ErrorCode::InvalidSharpness, msg.str());
    }
}

EffectPair unsharp_effects(const UnsharpSetting &setting) {
    validate_sharpness(setting.sharpness);
    const Matrix2 identity = Matrix2::Identity();
    const Matrix2 p = pauli(setting.axis);
    return {(identity + setting.sharpness * p) / 2.0, (identity - setting.sharpness * p) / 2.0};
}

EffectPair sqrt_unsharp_effects(const UnsharpSetting &setting) {
    validate_sharpness(setting.sharpness);
    // P = Q+ - Q- with spectral projectors Q+- = (I +- P) / 2, and
    // E0 = (1 + lambda)/2 Q+ + (1 - lambda)/2 Q-.
    const Matrix2 identity = Matrix2::Identity();
    const Matrix2 p = pauli(setting.axis);
    const Matrix2 plus = (identity + p) / 2.0;
    const Matrix2 minus = (identity - p) / 2.0;
    const double root_hi = std::sqrt((1.0 + setting.sharpness) / 2.0);
    const double root_lo = std::sqrt((1.0 - setting.sharpness) / 2.0);
    return {root_hi * plus + root_lo * minus, root_lo * plus + root_hi * minus};
}

RoundPolicy::RoundPolicy(double lambda) : lambda_(lambda) { validate_sharpness(lambda); }

DensityMatrix luders_single(const DensityMatrix &rho, Side side, const UnsharpSetting &setting) {
    validate_sharpness(setting.sharpness);
    return DensityMatrix::from_matrix(luders_unchecked(rho.matrix(), side, setting));
}

DensityMatrix side_averaged_channel(const DensityMatrix &rho, Side side,
                                    const RoundPolicy &policy) {
    ComplexMatrix4 sum = ComplexMatrix4::Zero();
    for (const Axis axis : kAxes) {
        sum += luders_unchecked(rho.matrix(), side, policy.setting(axis));
    }
    return DensityMatrix::from_matrix(sum / 3.0);
}

DensityMatrix pair_round(const DensityMatrix &rho, const RoundPolicy &policy) {
    std::array<EffectPair, 3> roots;
    for (std::size_t i = 0; i < kAxes.size(); ++i) {
        roots[i] = sqrt_unsharp_effects(policy.setting(kAxes[i]));
    }

    ComplexMatrix4 sum = ComplexMatrix4::Zero();
    for (const EffectPair &alice : roots) {
        for (const EffectPair &bob : roots) {
            for (const Matrix2 *a : {&alice.e0, &alice.e1}) {
                for (const Matrix2 *b : {&bob.e0, &bob.e1}) {
                    const ComplexMatrix4 k = kron(*a, *b);
                    sum += k * rho.matrix() * k.adjoint();
                }
            }
        }
    }
    return DensityMatrix::from_matrix(sum / 9.0);
}

}  // namespace seqwit
