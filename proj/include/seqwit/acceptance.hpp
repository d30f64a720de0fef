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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

/// Built-in acceptance suite, shared by `seqwit verify` and the acceptance
/// test binary.
namespace seqwit::acceptance {

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteResult {
    std::vector<CriterionResult> results;

    bool all_passed() const;
};

/// Identifiers in execution order.
const std::vector<std::string> &criterion_ids();

/// Runs the selected criteria (all when `only` is empty), printing one
/// PASS/FAIL line per criterion. Unknown ids throw std::invalid_argument.
SuiteResult run(std::ostream &out, const std::vector<std::string> &only = {});

}  // namespace seqwit::acceptance
