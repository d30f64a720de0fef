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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "seqwit/states.hpp"

namespace seqwit {

enum class Truncation {
    /// All requested pairs received a sharpness in (0, 1).
    Completed,
    /// The next greedy value would be >= 1 (or underflowed to 0): that pair
    /// cannot detect.
    Saturated,
};

std::string_view to_string(Truncation truncation);

struct SequencePlan {
    FamilySpec family;
    double epsilon;
    double lambda1_sq;
    /// lambda_k^2 for k = 1..feasible_horizon, each in (0, 1).
    std::vector<double> values;
    int feasible_horizon = 0;
    Truncation truncation = Truncation::Completed;
    /// When Saturated: the greedy value that left (0, 1).
    std::optional<double> saturating_value;
};

/// Throws Error(InvalidEpsilon) unless epsilon is finite and > 0.
void validate_epsilon(double epsilon);

/// Squared sharpness the first pair must exceed to detect.
double first_pair_threshold(const FamilySpec &family);

/// lambda_1^2 = lambda1_sq, then lambda_k^2 = (1 + epsilon) * threshold_k
/// until n values are emitted or the next value leaves (0, 1).
SequencePlan greedy_sequence(const FamilySpec &family, double epsilon, double lambda1_sq, int n);

struct BoundSequence {
    std::vector<double> values;
    Truncation truncation = Truncation::Completed;
    std::optional<double> saturating_value;
};

/// Upper bound for the weak-family greedy sequence:
///   gamma_1^2 = (1 + eps) theta / (2 alpha)
///   gamma_k^2 = (1 + eps) [1 - (1 - theta^2/2) prod_{l<k} (1 - 2 gamma_l^2 / 3)^2]
///                        / [theta prod_{l<k} ((2 - gamma_l^2) / 3)^2]
BoundSequence gamma_bound_sequence(double theta, double alpha, double epsilon, int n);

/// True iff values[k+1] > values[k] for every stored k >= 2 (1-based).
/// Throws Error(TooShort) for fewer than three values.
bool check_monotone(std::span<const double> values);
bool check_monotone(const SequencePlan &plan);

/// Largest lambda_1^2 (to 1e-3 in log10) whose greedy sequence reaches
/// horizon n, or nullopt when even the smallest admissible value fails.
std::optional<double> plan_lambda1(const FamilySpec &family, double epsilon, int n);

inline constexpr int kDefaultHorizonCap = 64;

/// Largest n <= cap for which plan_lambda1 succeeds (0 if none).
int max_horizon(const FamilySpec &family, double epsilon, int cap = kDefaultHorizonCap);

}  // namespace seqwit
