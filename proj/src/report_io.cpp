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

#include "seqwit/report_io.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "overloaded.hpp"

namespace seqwit {

using detail::overloaded;

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

namespace {

template <typename T, typename Format>
std::string optional_field(const std::optional<T> &value, Format format) {
    return value ? format(*value) : std::string();
}

std::string bool_field(bool value) { return value ? "true" : "false"; }

}  // namespace

void write_report_csv(std::ostream &out, const VerificationReport &report) {
    out << kReportCsvHeader << '\n';
    for (const VerificationRow &row : report.rows) {
        out << row.k << ',' << format_double(row.lambda_sq) << ','
            << format_double(row.witness_closed) << ','
            << optional_field(row.witness_sim, format_double) << ','
            << optional_field(row.negativity, format_double) << ','
            << optional_field(row.chsh_m, format_double) << ','
            << optional_field(row.ppt_entangled, bool_field) << ',' << bool_field(row.detected)
            << '\n';
    }
}

std::string report_csv(const VerificationReport &report) {
    std::ostringstream out;
    write_report_csv(out, report);
    return out.str();
}

nlohmann::json family_to_json(const FamilySpec &family) {
    nlohmann::json j;
    j["family"] = family_name(family);
    std::visit(overloaded{
                   [](const Maximal &) {},
                   [&](const PureAlpha &f) { j["alpha"] = f.alpha; },
                   [&](const MixedClass &f) {
                       j["p1"] = f.p1;
                       j["p2"] = f.p2;
                       j["p3"] = f.p3;
                       j["alpha"] = f.alpha;
                   },
                   [&](const Weak &f) {
                       j["theta"] = f.theta;
                       j["alpha"] = f.alpha;
                   },
               },
               family);
    return j;
}

nlohmann::json report_summary_json(const VerificationReport &report) {
    int detected = 0;
    for (const VerificationRow &row : report.rows) detected += row.detected ? 1 : 0;

    nlohmann::json j;
    j["family"] = family_to_json(report.family);
    j["epsilon"] = report.epsilon;
    j["lambda1_sq"] = report.lambda1_sq;
    j["engine_requested"] = std::string(to_string(report.requested));
    j["engines_used"] = report.simulated ? nlohmann::json::array({"closed", "sim"})
                                         : nlohmann::json::array({"closed"});
    j["pairs_requested"] = report.pairs_requested;
    j["feasible_horizon"] = static_cast<int>(report.rows.size());
    j["detected_pairs"] = detected;
    j["truncation"] = std::string(to_string(report.truncation));
    nlohmann::json lambdas = nlohmann::json::array();
    for (const VerificationRow &row : report.rows) lambdas.push_back(row.lambda_sq);
    j["lambda_sq"] = lambdas;
    return j;
}

}  // namespace seqwit
