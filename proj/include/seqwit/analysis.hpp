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
#include <string_view>
#include <vector>

#include "seqwit/linalg.hpp"
#include "seqwit/sequences.hpp"
#include "seqwit/states.hpp"

namespace seqwit {

/// PT eigenvalues below -kPptThreshold count as entangled.
inline constexpr double kPptThreshold = 1e-10;
inline constexpr double kEngineMismatchTolerance = 1e-9;
/// Below this lambda_1^2 the matrix engine cannot resolve the witness values.
inline constexpr double kSimulationLambdaFloor = 1e-8;

/// max(0, -lambda_min(rho^{T_B})). Two-qubit PT has at most one negative
/// eigenvalue, so this is the usual negativity and vanishes iff separable.
double negativity(const DensityMatrix &rho);

/// Peres-Horodecki test (exact for two qubits).
bool is_entangled_ppt(const DensityMatrix &rho);

/// Horodecki M(rho): sum of the two largest eigenvalues of T^T T, where T is
/// the correlation matrix. CHSH can be violated iff M > 1; the best CHSH value
/// is 2 sqrt(M).
double horodecki_m(const DensityMatrix &rho);

enum class Engines { Closed, Sim, Both };

std::string_view to_string(Engines engines);

struct VerificationRow {
    int k;
    double lambda_sq;
    double witness_closed;
    // Present only when the matrix engine ran.
    std::optional<double> witness_sim;
    std::optional<double> negativity;
    std::optional<double> chsh_m;
    std::optional<bool> ppt_entangled;
    /// witness_closed < 0.
    bool detected;
};

struct VerificationReport {
    FamilySpec family;
    double epsilon;
    double lambda1_sq;
    Engines requested;
    /// False when the matrix engine was requested but skipped because
    /// lambda_1^2 is below kSimulationLambdaFloor, or not requested at all.
    bool simulated;
    int pairs_requested;
    Truncation truncation;
    std::vector<VerificationRow> rows;
};

/// Walks the plan pair by pair. Each row is evaluated on the state at the
/// hand of pair k, before that pair's round is applied. The closed-form
/// engine always runs; Sim and Both add the matrix engine and cross-check it.
/// Throws Error(EngineMismatch) when the engines disagree by more than
/// kEngineMismatchTolerance and Error(InvalidFamilyParams) when the plan was
/// built for a different family.
VerificationReport verify_sequence(const FamilySpec &family, const SequencePlan &plan,
                                   Engines engines, int pairs_requested = 0);

}  // namespace seqwit
