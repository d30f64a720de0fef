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

#include <string>
#include <variant>

#include "seqwit/linalg.hpp"

namespace seqwit {

/// (|01> + |10>) / sqrt(2).
struct Maximal {
    bool operator==(const Maximal &) const = default;
};

/// sqrt(alpha)|01> + sqrt(1 - alpha)|10>, alpha in (0, 1/2].
struct PureAlpha {
    double alpha;
    bool operator==(const PureAlpha &) const = default;
};

/// p1 |psi_alpha><psi_alpha| + p2 |01><01| + p3 |10><10|.
struct MixedClass {
    double p1;
    double p2;
    double p3;
    double alpha;
    bool operator==(const MixedClass &) const = default;
};

/// 1/4 [I - cos(theta) ZZ + alpha sin(theta) (XX + YY)],
/// theta in (0, pi/4], (1 - cos theta) / (2 sin theta) < alpha <= 1.
struct Weak {
    double theta;
    double alpha;
    bool operator==(const Weak &) const = default;
};

using FamilySpec = std::variant<Maximal, PureAlpha, MixedClass, Weak>;

/// "maximal", "pure", "mixed" or "weak".
std::string family_name(const FamilySpec &spec);

/// Smallest alpha (exclusive) for which Weak(theta, alpha) is entangled.
double weak_alpha_boundary(double theta);

/// Throws Error(InvalidFamilyParams) naming the violated constraint.
void validate(const FamilySpec &spec);

DensityMatrix make_state(const FamilySpec &spec);

struct InitialCorrelators {
    /// <Z (x) Z>
    double zz;
    /// <X (x) X> + <Y (x) Y>
    double xx_plus_yy;
};

/// Correlators of the initial state, in closed form.
InitialCorrelators initial_correlators(const FamilySpec &spec);

}  // namespace seqwit
