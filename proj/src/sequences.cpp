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

#include "seqwit/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "seqwit/errors.hpp"
#include "seqwit/witness.hpp"

namespace seqwit {

namespace {

constexpr double kLambda1Floor = 1e-300;
constexpr double kThresholdMargin = 1e-9;
constexpr double kLogResolution = 1e-3;

std::string str(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

void validate_count(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidCount, "pair count must be >= 1, got " + std::to_string(n));
}

/// Next greedy value is only usable if it lies in (0, 1).
bool usable(double lambda_sq) { return lambda_sq > 0.0 && lambda_sq < 1.0; }

}  // namespace

std::string_view to_string(Truncation truncation) {
    return truncation == Truncation::Completed ? "completed" : "saturated";
}

void validate_epsilon(double epsilon) {
    if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
        throw Error(ErrorCode::InvalidEpsilon, "epsilon must be finite and > 0, got " + str(epsilon));
    }
}

double first_pair_threshold(const FamilySpec &family) {
    return detection_threshold(CorrelationState::for_family(family));
}

SequencePlan greedy_sequence(const FamilySpec &family, double epsilon, double lambda1_sq, int n) {
    validate_epsilon(epsilon);
    validate_count(n);
    CorrelationState state = CorrelationState::for_family(family);
    const double threshold = detection_threshold(state);
    if (!(lambda1_sq > threshold)) {
        throw Error(ErrorCode::Lambda1BelowThreshold,
                    "lambda1_sq = " + str(lambda1_sq) + " does not exceed the first-pair threshold " +
                        str(threshold));
    }
    if (!(lambda1_sq < 1.0)) {
        throw Error(ErrorCode::InvalidSharpness, "lambda1_sq must be < 1, got " + str(lambda1_sq));
    }

    SequencePlan plan{family, epsilon, lambda1_sq, {lambda1_sq}, 0, Truncation::Completed, {}};
    plan.values.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(plan.values.size()) < n) {
        state = advance_squared(state, plan.values.back());
        const double next = (1.0 + epsilon) * detection_threshold(state);
        if (!usable(next)) {
            plan.truncation = Truncation::Saturated;
            plan.saturating_value = next;
            break;
        }
        plan.values.push_back(next);
    }
    plan.feasible_horizon = static_cast<int>(plan.values.size());
    return plan;
}

BoundSequence gamma_bound_sequence(double theta, double alpha, double epsilon, int n) {
    validate(FamilySpec{Weak{theta, alpha}});
    validate_epsilon(epsilon);
    validate_count(n);

    BoundSequence out;
    const double first = (1.0 + epsilon) * theta / (2.0 * alpha);
    if (!usable(first)) {
        out.truncation = Truncation::Saturated;
        out.saturating_value = first;
        return out;
    }
    out.values.push_back(first);

    // 1 - prod (1 - 2g/3)^2 carried as a deficit, as in the witness engine.
    double z_deficit = 0.0;
    double x_factor = 1.0;
    const double cos_bound = 1.0 - theta * theta / 2.0;
    while (static_cast<int>(out.values.size()) < n) {
        const double g = out.values.back();
        const double z_gain = (4.0 * g / 3.0) * (1.0 - g / 3.0);
        z_deficit = std::min(1.0, z_deficit + (1.0 - z_deficit) * z_gain);
        const double x_step = (2.0 - g) / 3.0;
        x_factor *= x_step * x_step;

        const double numerator = theta * theta / 2.0 + cos_bound * z_deficit;
        const double next = (1.0 + epsilon) * numerator / (theta * x_factor);
        if (!usable(next)) {
            out.truncation = Truncation::Saturated;
            out.saturating_value = next;
            break;
        }
        out.values.push_back(next);
    }
    return out;
}

bool check_monotone(std::span<const double> values) {
    if (values.size() < 3) {
        throw Error(ErrorCode::TooShort, "monotonicity check needs at least 3 values, got " +
                                             std::to_string(values.size()));
    }
    // Index 1 is lambda_2^2; lambda_1^2 is a free choice and is not compared.
    for (std::size_t k = 1; k + 1 < values.size(); ++k) {
        if (!(values[k + 1] / values[k] > 1.0)) return false;
    }
    return true;
}

bool check_monotone(const SequencePlan &plan) { return check_monotone(std::span(plan.values)); }

std::optional<double> plan_lambda1(const FamilySpec &family, double epsilon, int n) {
    validate_epsilon(epsilon);
    validate_count(n);
    const double threshold = first_pair_threshold(family);
    const double lowest = std::max(threshold * (1.0 + kThresholdMargin), kLambda1Floor);

    const auto reaches = [&](double lambda1_sq) {
        return greedy_sequence(family, epsilon, lambda1_sq, n).feasible_horizon >= n;
    };
    if (!(lowest < 1.0) || !reaches(lowest)) return std::nullopt;

    double best = lowest;
    double lo_log = std::log10(lowest);
    double hi_log = 0.0;
    while (hi_log - lo_log > kLogResolution) {
        const double mid = 0.5 * (lo_log + hi_log);
        const double candidate = std::pow(10.0, mid);
        if (candidate > threshold && candidate < 1.0 && reaches(candidate)) {
            lo_log = mid;
            best = candidate;
        } else {
            hi_log = mid;
        }
    }
    return best;
}

int max_horizon(const FamilySpec &family, double epsilon, int cap) {
    validate_epsilon(epsilon);
    validate_count(cap);
    int best = 0;
    for (int n = 1; n <= cap; ++n) {
        if (!plan_lambda1(family, epsilon, n)) break;
        best = n;
    }
    return best;
}

}  // namespace seqwit
