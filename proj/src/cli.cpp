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

#include "seqwit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "overloaded.hpp"
#include "seqwit/acceptance.hpp"
#include "seqwit/errors.hpp"
#include "seqwit/report_io.hpp"

namespace seqwit::cli {

using detail::overloaded;

namespace {

double require_param(const std::optional<double> &value, const std::string &family,
                     const char *name) {
    if (!value) throw ConfigError(family + " family requires --" + std::string(name));
    return *value;
}

template <typename T>
T json_get(const nlohmann::json &j, const char *key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &) {
        throw ConfigError(std::string("config field '") + key + "' has the wrong type");
    }
}

/// Accepts a number or an array of numbers.
std::vector<double> json_grid(const nlohmann::json &j, const char *key) {
    const nlohmann::json &value = j.at(key);
    if (value.is_number()) return {value.get<double>()};
    if (value.is_array()) {
        std::vector<double> out;
        for (const auto &item : value) {
            if (!item.is_number()) {
                throw ConfigError(std::string("config field '") + key + "' must hold numbers");
            }
            out.push_back(item.get<double>());
        }
        return out;
    }
    throw ConfigError(std::string("config field '") + key + "' must be a number or an array");
}

nlohmann::json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + path.string() + "'");
    file << text;
}

std::string optional_number(const std::optional<double> &value) {
    return value ? format_double(*value) : std::string();
}

/// Flags shared by the run and plan commands. Values only apply when the
/// corresponding option was given on the command line.
struct CommonFlags {
    std::string family;
    double alpha = 0.0;
    double theta = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double epsilon = 0.0;
    double lambda1_sq = 0.0;
    int pairs = 0;
    std::string engine;
    int horizon_cap = kDefaultHorizonCap;
    std::string out;
    std::string config;
    std::map<std::string, CLI::Option *> options;

    void attach(CLI::App *sub) {
        options["family"] = sub->add_option("--family", family, "maximal | pure | mixed | weak");
        options["alpha"] = sub->add_option("--alpha", alpha, "alpha parameter");
        options["theta"] = sub->add_option("--theta", theta, "theta parameter in radians");
        options["p1"] = sub->add_option("--p1", p1, "mixed-family weight of |psi_alpha>");
        options["p2"] = sub->add_option("--p2", p2, "mixed-family weight of |01>");
        options["p3"] = sub->add_option("--p3", p3, "mixed-family weight of |10>");
        options["epsilon"] = sub->add_option("--epsilon", epsilon, "greedy margin epsilon > 0");
        options["lambda1_sq"] =
            sub->add_option("--lambda1-sq", lambda1_sq, "first pair's squared sharpness");
        options["pairs"] = sub->add_option("--pairs", pairs, "number of observer pairs");
        options["engine"] = sub->add_option("--engine", engine, "closed | sim | both");
        options["horizon_cap"] = sub->add_option("--horizon-cap", horizon_cap, "horizon search cap");
        options["out"] = sub->add_option("--out", out, "CSV output path");
        options["config"] = sub->add_option("--config", config, "JSON config file");
    }

    bool given(const std::string &name) const { return options.at(name)->count() > 0; }

    RunConfig resolve() const {
        RunConfig cfg = given("config") ? config_from_json(load_json(config)) : RunConfig{};
        if (given("family")) cfg.family.name = family;
        if (given("alpha")) cfg.family.alpha = alpha;
        if (given("theta")) cfg.family.theta = theta;
        if (given("p1")) cfg.family.p1 = p1;
        if (given("p2")) cfg.family.p2 = p2;
        if (given("p3")) cfg.family.p3 = p3;
        if (given("epsilon")) cfg.epsilon = epsilon;
        if (given("lambda1_sq")) cfg.lambda1_sq = lambda1_sq;
        if (given("pairs")) cfg.pairs = pairs;
        if (given("engine")) cfg.engine = parse_engines(engine);
        if (given("horizon_cap")) cfg.horizon_cap = horizon_cap;
        if (given("out")) cfg.output = out;
        return cfg;
    }
};

struct CheckedRun {
    FamilySpec family;
    double epsilon;
    int pairs;
};

CheckedRun check_run_config(const RunConfig &cfg) {
    const FamilySpec family = make_family(cfg.family);
    if (!cfg.epsilon) throw ConfigError("--epsilon is required");
    validate_epsilon(*cfg.epsilon);
    if (!cfg.pairs) throw ConfigError("--pairs is required");
    if (*cfg.pairs < 1) throw ConfigError("--pairs must be >= 1");
    if (cfg.horizon_cap < 1) throw ConfigError("--horizon-cap must be >= 1");
    return {family, *cfg.epsilon, *cfg.pairs};
}

int cmd_run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const CheckedRun checked = check_run_config(cfg);
    const auto plan = build_run_plan(checked.family, cfg);
    if (!plan) {
        err << "infeasible: no lambda1_sq gives even one detecting pair\n";
        return kExitFailure;
    }
    const VerificationReport report =
        verify_sequence(checked.family, *plan, cfg.engine, checked.pairs);
    if (!report.simulated && cfg.engine != Engines::Closed) {
        err << "note: lambda1_sq below " << format_double(kSimulationLambdaFloor)
            << ", matrix engine skipped\n";
    }

    const std::string csv = report_csv(report);
    if (cfg.output.empty()) {
        out << csv;
    } else {
        std::filesystem::path csv_path(cfg.output);
        std::filesystem::path summary_path = csv_path;
        summary_path.replace_extension(".summary.json");
        write_text_file(csv_path, csv);
        write_text_file(summary_path, report_summary_json(report).dump(2) + "\n");
    }

    const int horizon = static_cast<int>(report.rows.size());
    if (horizon < checked.pairs) {
        err << "saturated: " << horizon << " of " << checked.pairs << " pairs detect\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_plan(const RunConfig &cfg, std::ostream &out) {
    const CheckedRun checked = check_run_config(cfg);
    const auto lambda1_sq = plan_lambda1(checked.family, checked.epsilon, checked.pairs);
    if (!lambda1_sq) {
        out << "infeasible\n";
        return kExitFailure;
    }
    out << format_double(*lambda1_sq) << '\n';
    return kExitOk;
}

struct SweepFlags {
    std::string family;
    std::vector<double> theta;
    std::vector<double> alpha;
    std::vector<double> p1;
    std::vector<double> p2;
    std::vector<double> p3;
    double epsilon = 0.0;
    int horizon_cap = kDefaultHorizonCap;
    std::string out;
    std::string config;
    std::map<std::string, CLI::Option *> options;

    void attach(CLI::App *sub) {
        options["family"] = sub->add_option("--family", family, "maximal | pure | mixed | weak");
        options["theta"] = sub->add_option("--theta", theta, "theta grid (comma separated)")
                               ->delimiter(',');
        options["alpha"] = sub->add_option("--alpha", alpha, "alpha grid")->delimiter(',');
        options["p1"] = sub->add_option("--p1", p1, "p1 grid")->delimiter(',');
        options["p2"] = sub->add_option("--p2", p2, "p2 grid")->delimiter(',');
        options["p3"] = sub->add_option("--p3", p3, "p3 grid (mixed default: 1 - p1 - p2)")
                            ->delimiter(',');
        options["epsilon"] = sub->add_option("--epsilon", epsilon, "greedy margin epsilon > 0");
        options["horizon_cap"] = sub->add_option("--horizon-cap", horizon_cap, "horizon search cap");
        options["out"] = sub->add_option("--out", out, "CSV output path");
        options["config"] = sub->add_option("--config", config, "JSON config file");
    }

    bool given(const std::string &name) const { return options.at(name)->count() > 0; }
};

int cmd_sweep(SweepFlags flags, std::ostream &out) {
    std::string family = "maximal";
    std::optional<double> epsilon;
    int cap = kDefaultHorizonCap;
    std::string output;
    std::map<std::string, std::vector<double>> grid;

    if (flags.given("config")) {
        const nlohmann::json j = load_json(flags.config);
        static const std::set<std::string> known{"family", "theta", "alpha",       "p1", "p2",
                                                 "p3",     "epsilon", "horizon_cap", "out"};
        for (const auto &item : j.items()) {
            if (!known.count(item.key())) throw ConfigError("unknown sweep config field '" + item.key() + "'");
        }
        if (j.contains("family")) family = json_get<std::string>(j, "family");
        if (j.contains("epsilon")) epsilon = json_get<double>(j, "epsilon");
        if (j.contains("horizon_cap")) cap = json_get<int>(j, "horizon_cap");
        if (j.contains("out")) output = json_get<std::string>(j, "out");
        for (const char *key : {"theta", "alpha", "p1", "p2", "p3"}) {
            if (j.contains(key)) grid[key] = json_grid(j, key);
        }
    }
    if (flags.given("family")) family = flags.family;
    if (flags.given("epsilon")) epsilon = flags.epsilon;
    if (flags.given("horizon_cap")) cap = flags.horizon_cap;
    if (flags.given("out")) output = flags.out;
    if (flags.given("theta")) grid["theta"] = flags.theta;
    if (flags.given("alpha")) grid["alpha"] = flags.alpha;
    if (flags.given("p1")) grid["p1"] = flags.p1;
    if (flags.given("p2")) grid["p2"] = flags.p2;
    if (flags.given("p3")) grid["p3"] = flags.p3;

    if (!epsilon) throw ConfigError("--epsilon is required");
    validate_epsilon(*epsilon);
    if (cap < 1) throw ConfigError("--horizon-cap must be >= 1");

    const std::vector<FamilySpec> points = expand_grid(family, grid["theta"], grid["alpha"],
                                                       grid["p1"], grid["p2"], grid["p3"]);
    const std::vector<SweepRow> rows = run_sweep(points, *epsilon, cap);

    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    if (output.empty()) {
        out << csv.str();
    } else {
        write_text_file(output, csv.str());
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string> &only, std::ostream &out) {
    const acceptance::SuiteResult suite = acceptance::run(out, only);
    int failed = 0;
    for (const auto &r : suite.results) failed += r.passed ? 0 : 1;
    out << (failed == 0 ? "all " + std::to_string(suite.results.size()) + " criteria passed"
                        : std::to_string(failed) + " of " + std::to_string(suite.results.size()) +
                              " criteria failed")
        << '\n';
    return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

FamilySpec make_family(const FamilyParams &params) {
    FamilySpec spec;
    const std::string &name = params.name;
    if (name == "maximal") {
        spec = Maximal{};
    } else if (name == "pure") {
        spec = PureAlpha{require_param(params.alpha, name, "alpha")};
    } else if (name == "mixed") {
        spec = MixedClass{require_param(params.p1, name, "p1"), require_param(params.p2, name, "p2"),
                          require_param(params.p3, name, "p3"),
                          require_param(params.alpha, name, "alpha")};
    } else if (name == "weak") {
        spec = Weak{require_param(params.theta, name, "theta"),
                    require_param(params.alpha, name, "alpha")};
    } else {
        throw ConfigError("unknown family '" + name + "' (expected maximal, pure, mixed or weak)");
    }
    validate(spec);
    return spec;
}

Engines parse_engines(const std::string &name) {
    if (name == "closed") return Engines::Closed;
    if (name == "sim") return Engines::Sim;
    if (name == "both") return Engines::Both;
    throw ConfigError("unknown engine '" + name + "' (expected closed, sim or both)");
}

RunConfig config_from_json(const nlohmann::json &j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> known{"family", "alpha",      "theta", "p1",
                                             "p2",     "p3",         "epsilon", "lambda1_sq",
                                             "pairs",  "engine",     "horizon_cap", "out"};
    for (const auto &item : j.items()) {
        if (!known.count(item.key())) throw ConfigError("unknown config field '" + item.key() + "'");
    }

    RunConfig cfg;
    if (j.contains("family")) cfg.family.name = json_get<std::string>(j, "family");
    if (j.contains("alpha")) cfg.family.alpha = json_get<double>(j, "alpha");
    if (j.contains("theta")) cfg.family.theta = json_get<double>(j, "theta");
    if (j.contains("p1")) cfg.family.p1 = json_get<double>(j, "p1");
    if (j.contains("p2")) cfg.family.p2 = json_get<double>(j, "p2");
    if (j.contains("p3")) cfg.family.p3 = json_get<double>(j, "p3");
    if (j.contains("epsilon")) cfg.epsilon = json_get<double>(j, "epsilon");
    if (j.contains("lambda1_sq")) cfg.lambda1_sq = json_get<double>(j, "lambda1_sq");
    if (j.contains("pairs")) cfg.pairs = json_get<int>(j, "pairs");
    if (j.contains("engine")) cfg.engine = parse_engines(json_get<std::string>(j, "engine"));
    if (j.contains("horizon_cap")) cfg.horizon_cap = json_get<int>(j, "horizon_cap");
    if (j.contains("out")) cfg.output = json_get<std::string>(j, "out");
    return cfg;
}

std::optional<SequencePlan> build_run_plan(const FamilySpec &family, const RunConfig &config) {
    const double epsilon = config.epsilon.value();
    const int pairs = config.pairs.value();
    if (config.lambda1_sq) return greedy_sequence(family, epsilon, *config.lambda1_sq, pairs);
    for (int n = pairs; n >= 1; --n) {
        if (const auto lambda1_sq = plan_lambda1(family, epsilon, n)) {
            return greedy_sequence(family, epsilon, *lambda1_sq, pairs);
        }
    }
    return std::nullopt;
}

std::vector<SweepRow> run_sweep(const std::vector<FamilySpec> &points, double epsilon, int cap,
                                unsigned max_threads) {
    for (const FamilySpec &point : points) validate(point);
    validate_epsilon(epsilon);

    std::vector<SweepRow> rows(points.size(), SweepRow{Maximal{}, 0.0, 0, std::nullopt});
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            const FamilySpec &family = points[i];
            SweepRow row{family, negativity(make_state(family)), max_horizon(family, epsilon, cap),
                         std::nullopt};
            if (row.max_horizon > 0) row.lambda1_sq = plan_lambda1(family, epsilon, row.max_horizon);
            rows[i] = row;
        }
    };

    unsigned threads = max_threads > 0 ? max_threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return rows;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow &row : rows) {
        std::optional<double> theta, alpha, p1, p2, p3;
        std::visit(overloaded{
                       [](const Maximal &) {},
                       [&](const PureAlpha &f) { alpha = f.alpha; },
                       [&](const MixedClass &f) {
                           alpha = f.alpha;
                           p1 = f.p1;
                           p2 = f.p2;
                           p3 = f.p3;
                       },
                       [&](const Weak &f) {
                           theta = f.theta;
                           alpha = f.alpha;
                       },
                   },
                   row.family);
        out << family_name(row.family) << ',' << optional_number(theta) << ','
            << optional_number(alpha) << ',' << optional_number(p1) << ',' << optional_number(p2)
            << ',' << optional_number(p3) << ',' << format_double(row.negativity) << ','
            << row.max_horizon << ',' << optional_number(row.lambda1_sq) << '\n';
    }
}

std::vector<FamilySpec> expand_grid(const std::string &family, std::vector<double> theta,
                                    std::vector<double> alpha, std::vector<double> p1,
                                    std::vector<double> p2, std::vector<double> p3) {
    const auto axis = [](std::vector<double> &values, const char *name) {
        if (values.empty()) throw ConfigError(std::string("empty grid: --") + name + " has no values");
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
    };

    std::vector<FamilySpec> points;
    if (family == "maximal") {
        points.push_back(Maximal{});
    } else if (family == "pure") {
        axis(alpha, "alpha");
        for (double a : alpha) points.push_back(PureAlpha{a});
    } else if (family == "weak") {
        axis(theta, "theta");
        axis(alpha, "alpha");
        for (double t : theta) {
            for (double a : alpha) points.push_back(Weak{t, a});
        }
    } else if (family == "mixed") {
        axis(alpha, "alpha");
        axis(p1, "p1");
        axis(p2, "p2");
        const bool derive_p3 = p3.empty();
        if (!derive_p3) axis(p3, "p3");
        for (double a : alpha) {
            for (double w1 : p1) {
                for (double w2 : p2) {
                    if (derive_p3) {
                        points.push_back(MixedClass{w1, w2, 1.0 - w1 - w2, a});
                    } else {
                        for (double w3 : p3) points.push_back(MixedClass{w1, w2, w3, a});
                    }
                }
            }
        }
    } else {
        throw ConfigError("unknown family '" + family + "' (expected maximal, pure, mixed or weak)");
    }
    for (const FamilySpec &point : points) validate(point);
    return points;
}

int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Sequential entanglement witnessing by independent pairs of unsharp observers"};
    app.name("seqwit");
    app.require_subcommand(1);

    CommonFlags run_flags;
    CLI::App *run = app.add_subcommand("run", "Generate a sharpness sequence and verify it");
    run_flags.attach(run);

    CommonFlags plan_flags;
    CLI::App *plan = app.add_subcommand("plan", "Choose lambda1_sq for a target number of pairs");
    plan_flags.attach(plan);

    SweepFlags sweep_flags;
    CLI::App *sweep = app.add_subcommand("sweep", "Map the feasible horizon over a parameter grid");
    sweep_flags.attach(sweep);

    std::vector<std::string> only;
    CLI::App *verify = app.add_subcommand("verify", "Run the built-in acceptance suite");
    verify->add_option("--only", only, "criterion ids to run")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (run->parsed()) return cmd_run(run_flags.resolve(), out, err);
        if (plan->parsed()) return cmd_plan(plan_flags.resolve(), out);
        if (sweep->parsed()) return cmd_sweep(sweep_flags, out);
        if (verify->parsed()) return cmd_verify(only, out);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::EngineMismatch:
            case ErrorCode::NoConvergence:
                return kExitFailure;
            default:
                return kExitInvalidInput;
        }
    }
    return kExitInvalidInput;
}

}  // namespace seqwit::cli
