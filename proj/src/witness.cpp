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

#include "seqwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seqwit/channels.hpp"
#include "seqwit/errors.hpp"

namespace seqwit {

namespace {

void validate_sharpness_squared(double lambda_sq) {
    if (!(lambda_sq >= 0.0 && lambda_sq <= 1.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "squared sharpness must lie in [0, 1], got " << lambda_sq;
        throw Error(ErrorCode::InvalidSharpness, msg.str());
    }
}

}  // namespace

ComplexMatrix4 witness_operator(double lambda) {
    validate_sharpness(lambda);
    const double lambda_sq = lambda * lambda;
    return (ComplexMatrix4::Identity() + pauli_tensor(Axis::Z, Axis::Z) -
            lambda_sq * pauli_tensor(Axis::X, Axis::X) -
            lambda_sq * pauli_tensor(Axis::Y, Axis::Y)) /
           4.0;
}

double witness_value(const DensityMatrix &rho, double lambda) {
    const double value = expectation(rho, witness_operator(lambda));
#ifdef SEQWIT_MUTATE_WITNESS_SIGN
    // Deliberate fault for the verify self-test build.
    return -value;
#else
    return value;
#endif
}

CorrelationState::CorrelationState(double zz1, double xy1)
    : CorrelationState(zz1, xy1, 1.0 + zz1) {}

CorrelationState::CorrelationState(double zz1, double xy1, double one_plus_zz)
    : zz1_(zz1), xy1_(xy1), one_plus_zz1_(one_plus_zz) {}

CorrelationState CorrelationState::for_family(const FamilySpec &spec) {
    const InitialCorrelators c = initial_correlators(spec);
    if (const auto *weak = std::get_if<Weak>(&spec)) {
        // 1 - cos(theta) without cancellation.
        const double half_sine = std::sin(weak->theta / 2.0);
        return CorrelationState(c.zz, c.xx_plus_yy, 2.0 * half_sine * half_sine);
    }
    return CorrelationState(c.zz, c.xx_plus_yy);
}

CorrelationState advance(const CorrelationState &state, double lambda) {
    validate_sharpness(lambda);
    return advance_squared(state, lambda * lambda);
}

CorrelationState advance_squared(const CorrelationState &state, double lambda_sq) {
    validate_sharpness_squared(lambda_sq);
    const double big_lambda = std::sqrt(1.0 - lambda_sq);
    // 1 - L = lambda^2 / (1 + L) and 1 - ((1 + 2L)/3)^2 = 4 (1 - L)(2 + L) / 9.
    const double one_minus = lambda_sq / (1.0 + big_lambda);
    const double z_gain = 4.0 * one_minus * (2.0 + big_lambda) / 9.0;
    const double x_step = (1.0 + big_lambda) / 3.0;

    CorrelationState next = state;
    next.z_deficit_ = std::min(1.0, state.z_deficit_ + (1.0 - state.z_deficit_) * z_gain);
    next.x_factor_ = state.x_factor_ * x_step * x_step;
    next.rounds_ = state.rounds_ + 1;
    return next;
}

double closed_form_witness_value(const CorrelationState &state, double lambda) {
    validate_sharpness(lambda);
    return closed_form_witness_value_squared(state, lambda * lambda);
}

double closed_form_witness_value_squared(const CorrelationState &state, double lambda_sq) {
    validate_sharpness_squared(lambda_sq);
    return (state.one_plus_initial_zz() - state.initial_zz() * state.z_deficit() -
            lambda_sq * state.initial_xy() * state.x_factor()) /
           4.0;
}

double detection_threshold(const CorrelationState &state) {
    if (!(state.initial_xy() > 0.0)) {
        std::ostringstream msg;
        msg << "<XX> + <YY> of the initial state must be positive, got " << state.initial_xy();
        throw Error(ErrorCode::DegenerateFamily, msg.str());
    }
    return (state.one_plus_initial_zz() - state.initial_zz() * state.z_deficit()) /
           (state.initial_xy() * state.x_factor());
}

}  // namespace seqwit
