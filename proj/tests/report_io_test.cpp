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

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "seqwit/random_states.hpp"

using namespace seqwit;

namespace {

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> parts;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) parts.push_back(field);
    if (!line.empty() && line.back() == sep) parts.emplace_back();
    return parts;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

double parse(const std::string &text) {
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    EXPECT_EQ(result.ec, std::errc());
    return value;
}

VerificationReport sample_report(Engines engines) {
    const SequencePlan plan = greedy_sequence(Maximal{}, 0.01, 1e-3, 5);
    return verify_sequence(Maximal{}, plan, engines, 7);
}

}  // namespace

TEST(format_double, shortest_round_trip) {
    Rng rng(101);
    std::uniform_real_distribution<double> exponent(-300.0, 300.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const double value = std::pow(10.0, exponent(rng)) * (trial % 2 ? -1.0 : 1.0);
        EXPECT_EQ(parse(format_double(value)), value);
    }
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1e-300), "1e-300");
    EXPECT_EQ(parse(format_double(std::numeric_limits<double>::denorm_min())),
              std::numeric_limits<double>::denorm_min());
}

TEST(report_csv, header_and_rows) {
    const VerificationReport report = sample_report(Engines::Both);
    const auto lines = lines_of(report_csv(report));
    ASSERT_EQ(lines.size(), report.rows.size() + 1);
    EXPECT_EQ(lines[0], kReportCsvHeader);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto fields = split(lines[i + 1], ',');
        ASSERT_EQ(fields.size(), 8u);
        const VerificationRow &row = report.rows[i];
        EXPECT_EQ(fields[0], std::to_string(row.k));
        EXPECT_EQ(parse(fields[1]), row.lambda_sq);
        EXPECT_EQ(parse(fields[2]), row.witness_closed);
        EXPECT_EQ(parse(fields[3]), *row.witness_sim);
        EXPECT_EQ(parse(fields[4]), *row.negativity);
        EXPECT_EQ(parse(fields[5]), *row.chsh_m);
        EXPECT_EQ(fields[6], *row.ppt_entangled ? "true" : "false");
        EXPECT_EQ(fields[7], row.detected ? "true" : "false");
    }
}

TEST(report_csv, closed_engine_leaves_matrix_fields_empty) {
    const auto lines = lines_of(report_csv(sample_report(Engines::Closed)));
    const auto fields = split(lines[1], ',');
    ASSERT_EQ(fields.size(), 8u);
    for (int i : {3, 4, 5, 6}) EXPECT_TRUE(fields[i].empty()) << i;
    EXPECT_EQ(fields[7], "true");
}

TEST(report_csv, deterministic) {
    EXPECT_EQ(report_csv(sample_report(Engines::Both)), report_csv(sample_report(Engines::Both)));
}

TEST(family_to_json, fields_per_family) {
    EXPECT_EQ(family_to_json(Maximal{}), nlohmann::json({{"family", "maximal"}}));
    EXPECT_EQ(family_to_json(PureAlpha{0.25}),
              nlohmann::json({{"family", "pure"}, {"alpha", 0.25}}));
    const auto mixed = family_to_json(MixedClass{0.5, 0.25, 0.25, 0.3});
    EXPECT_EQ(mixed["p3"], 0.25);
    const auto weak = family_to_json(Weak{0.2, 0.9});
    EXPECT_EQ(weak["theta"], 0.2);
    EXPECT_EQ(weak["alpha"], 0.9);
}

TEST(report_summary_json, contents) {
    const VerificationReport report = sample_report(Engines::Both);
    const nlohmann::json j = report_summary_json(report);
    EXPECT_EQ(j["family"]["family"], "maximal");
    EXPECT_EQ(j["epsilon"], 0.01);
    EXPECT_EQ(j["lambda1_sq"], 1e-3);
    EXPECT_EQ(j["engine_requested"], "both");
    EXPECT_EQ(j["engines_used"], nlohmann::json::array({"closed", "sim"}));
    EXPECT_EQ(j["pairs_requested"], 7);
    EXPECT_EQ(j["feasible_horizon"], static_cast<int>(report.rows.size()));
    EXPECT_EQ(j["detected_pairs"], static_cast<int>(report.rows.size()));
    EXPECT_EQ(j["truncation"], std::string(to_string(report.truncation)));
    ASSERT_EQ(j["lambda_sq"].size(), report.rows.size());
    EXPECT_EQ(j["lambda_sq"][0].get<double>(), 1e-3);

    const nlohmann::json closed = report_summary_json(sample_report(Engines::Closed));
    EXPECT_EQ(closed["engines_used"], nlohmann::json::array({"closed"}));
}
