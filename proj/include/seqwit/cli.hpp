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
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "seqwit/analysis.hpp"
#include "seqwit/sequences.hpp"
#include "seqwit/states.hpp"

namespace seqwit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;

/// Raised for malformed flags or config files (exit code 2).
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct FamilyParams {
    std::string name = "maximal";
    std::optional<double> alpha;
    std::optional<double> theta;
    std::optional<double> p1;
    std::optional<double> p2;
    std::optional<double> p3;
};

/// Throws ConfigError for an unknown name or a missing parameter, and
/// Error(InvalidFamilyParams) for out-of-range values.
FamilySpec make_family(const FamilyParams &params);

struct RunConfig {
    FamilyParams family;
    std::optional<double> epsilon;
    /// Planner chooses lambda_1^2 when absent.
    std::optional<double> lambda1_sq;
    std::optional<int> pairs;
    Engines engine = Engines::Both;
    int horizon_cap = kDefaultHorizonCap;
    std::string output;
};

/// Fields: family, alpha, theta, p1, p2, p3, epsilon, lambda1_sq, pairs,
/// engine, horizon_cap, out. Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json &j);
Engines parse_engines(const std::string &name);

/// Plan used by `run`: greedy from the given lambda_1^2, or from the planner.
/// When the planner finds no lambda_1^2 reaching `pairs`, falls back to the
/// planner's choice for the longest reachable horizon, so the report shows
/// where the sequence saturates.
std::optional<SequencePlan> build_run_plan(const FamilySpec &family, const RunConfig &config);

struct SweepRow {
    FamilySpec family;
    double negativity;
    int max_horizon;
    /// Planner choice for max_horizon pairs; absent when max_horizon is 0.
    std::optional<double> lambda1_sq;
};

inline constexpr const char *kSweepCsvHeader =
    "family,theta,alpha,p1,p2,p3,negativity,max_horizon,lambda1_sq";

/// Evaluates points on up to max_threads workers (0: hardware concurrency).
/// Output order matches input order.
std::vector<SweepRow> run_sweep(const std::vector<FamilySpec> &points, double epsilon, int cap,
                                unsigned max_threads = 0);
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

/// Cartesian grid in lexicographic order of (theta, alpha, p1, p2, p3), each
/// axis sorted ascending. For the mixed family p3 defaults to 1 - p1 - p2.
/// Throws ConfigError for an empty grid.
std::vector<FamilySpec> expand_grid(const std::string &family, std::vector<double> theta,
                                    std::vector<double> alpha, std::vector<double> p1,
                                    std::vector<double> p2, std::vector<double> p3);

/// Entry point of the `seqwit` tool. Returns the process exit code.
int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace seqwit::cli
