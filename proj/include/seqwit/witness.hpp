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
#include "seqwit/states.hpp"

namespace seqwit {

/// W(lambda) = 1/4 [I + ZZ - lambda^2 XX - lambda^2 YY].
ComplexMatrix4 witness_operator(double lambda);

/// Tr[W(lambda) rho]. A strictly negative value detects entanglement.
double witness_value(const DensityMatrix &rho, double lambda);

/// Closed-form track of the two correlators the witness reads, after any
/// number of pair rounds.
///
/// After rounds with sharpness lambda_1..lambda_{k-1}, and L_l = sqrt(1 - lambda_l^2):
///   <ZZ>_k        = zz1 * (1 - D_k),  D_k = 1 - prod_l ((1 + 2 L_l) / 3)^2
///   <XX + YY>_k   = xy1 * X_k,        X_k = prod_l ((1 + L_l) / 3)^2
/// The ZZ product is carried as its deficit D_k so that 1 - prod stays exact
/// when every lambda is tiny and the product rounds to 1.
class CorrelationState {
   public:
    /// Fresh state (D = 0, X = 1). one_plus_zz defaults to 1 + zz1; pass an
    /// accurately computed value when zz1 is close to -1.
    CorrelationState(double zz1, double xy1);
    CorrelationState(double zz1, double xy1, double one_plus_zz);

    static CorrelationState for_family(const FamilySpec &spec);

    double initial_zz() const noexcept { return zz1_; }
    double initial_xy() const noexcept { return xy1_; }
    double one_plus_initial_zz() const noexcept { return one_plus_zz1_; }
    double z_deficit() const noexcept { return z_deficit_; }
    double x_factor() const noexcept { return x_factor_; }
    int rounds_applied() const noexcept { return rounds_; }

    /// Current <ZZ>.
    double zz() const noexcept { return zz1_ * (1.0 - z_deficit_); }
    /// Current <XX> + <YY>.
    double xy() const noexcept { return xy1_ * x_factor_; }

   private:
    friend CorrelationState advance_squared(const CorrelationState &state, double lambda_sq);

    double zz1_;
    double xy1_;
    double one_plus_zz1_;
    double z_deficit_ = 0.0;
    double x_factor_ = 1.0;
    int rounds_ = 0;
};

/// One pair round with x/y sharpness lambda (z sharpness 1).
CorrelationState advance(const CorrelationState &state, double lambda);
CorrelationState advance_squared(const CorrelationState &state, double lambda_sq);

/// 1/4 [(1 + zz1) - zz1 D - lambda^2 xy1 X].
double closed_form_witness_value(const CorrelationState &state, double lambda);
double closed_form_witness_value_squared(const CorrelationState &state, double lambda_sq);

/// Smallest lambda^2 for which the closed-form witness value is negative
/// (any value strictly above detects). May exceed 1.
/// Throws Error(DegenerateFamily) if xy1 <= 0.
double detection_threshold(const CorrelationState &state);

}  // namespace seqwit
