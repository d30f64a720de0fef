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

#include "json.hpp"
#include "seqwit/analysis.hpp"
#include "seqwit/states.hpp"

namespace seqwit {

inline constexpr const char *kReportCsvHeader =
    "k,lambda_sq,witness_closed,witness_sim,negativity,chsh_m,ppt_entangled,detected";

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Header plus one line per row; absent optionals are empty fields.
void write_report_csv(std::ostream &out, const VerificationReport &report);
std::string report_csv(const VerificationReport &report);

nlohmann::json family_to_json(const FamilySpec &family);

/// Run metadata plus aggregate detection results.
nlohmann::json report_summary_json(const VerificationReport &report);

}  // namespace seqwit
