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

#include "seqwit/linalg.hpp"

namespace seqwit {

/// Two-outcome unsharp measurement of a Pauli observable.
struct UnsharpSetting {
    Axis axis;
    double sharpness;
};

/// Throws Error(InvalidSharpness) unless 0 <= lambda <= 1.
void validate_sharpness(double lambda);

struct EffectPair {
    Matrix2 e0;
    Matrix2 e1;
};

/// E0 = (I + lambda P) / 2, E1 = (I - lambda P) / 2.
EffectPair unsharp_effects(const UnsharpSetting &setting);

/// Square roots of the effects, built from the spectral form of P.
EffectPair sqrt_unsharp_effects(const UnsharpSetting &setting);

/// One observer pair's measurement policy: sharpness lambda on x and y,
/// sharpness 1 on z.
class RoundPolicy {
   public:
    explicit RoundPolicy(double lambda);

    double lambda() const noexcept { return lambda_; }
    double sharpness(Axis axis) const noexcept { return axis == Axis::Z ? 1.0 : lambda_; }
    UnsharpSetting setting(Axis axis) const { return {axis, sharpness(axis)}; }

   private:
    double lambda_;
};

/// Unselective Lueders update sum_a sqrt(E_a) rho sqrt(E_a) on one side.
DensityMatrix luders_single(const DensityMatrix &rho, Side side, const UnsharpSetting &setting);

/// Uniform mixture over the three settings of the policy, on one side.
DensityMatrix side_averaged_channel(const DensityMatrix &rho, Side side,
                                    const RoundPolicy &policy);

/// The full per-pair channel: 1/9 sum over the 9 setting pairs and 4 outcome
/// pairs of (sqrt(A) (x) sqrt(B)) rho (sqrt(A) (x) sqrt(B)).
DensityMatrix pair_round(const DensityMatrix &rho, const RoundPolicy &policy);

}  // namespace seqwit
