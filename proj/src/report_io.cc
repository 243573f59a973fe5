// Copyright 2026 The booltest Authors
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


#include "booltest/report_io.h"

#include <cstdio>
#include <map>
#include <sstream>

#include "booltest/errors.h"
#include "json.hpp"

using namespace booltest;
using nlohmann::json;

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct Cell {
    const ExperimentRow *quantum = nullptr;
    const ExperimentRow *classical = nullptr;
};

/// Pairs quantum and classical rows of the same (eps, branch), keeping first-seen order.
std::vector<Cell> cells(const ExperimentReport &report) {
    std::vector<Cell> out;
    std::map<std::pair<double, std::string>, size_t> index;
    for (const auto &row : report.rows) {
        auto key = std::pair{row.epsilon, row.branch};
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            out.emplace_back();
        }
        (row.algorithm == "quantum" ? out[it->second].quantum : out[it->second].classical) = &row;
    }
    return out;
}

json row_to_json(const ExperimentRow &row, bool with_timing) {
    json j = {
        {"epsilon", row.epsilon},
        {"branch", row.branch},
        {"algorithm", row.algorithm},
        {"success", row.success},
        {"stderr", row.stderr_value ? json(*row.stderr_value) : json(nullptr)},
        {"trials", row.trials ? json(*row.trials) : json(nullptr)},
        {"mean_queries", row.mean_queries},
        {"m_or_T", row.m_or_T},
    };
    if (with_timing) {
        j["elapsed_ms"] = row.elapsed_ms;
    }
    return j;
}

template <typename T>
T field(const json &j, const char *key) {
    if (!j.contains(key)) {
        throw FormatError(std::string("report: missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        throw FormatError(std::string("report: field '") + key + "' has the wrong type");
    }
}

template <typename T>
std::optional<T> optional_field(const json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return field<T>(j, key);
}

json parse_document(const std::string &text, const char *schema) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("json: ") + e.what());
    }
    if (!j.is_object() || field<std::string>(j, "schema") != schema) {
        throw FormatError(std::string("json: expected schema ") + schema);
    }
    return j;
}

json plan_to_json(const AmplificationPlan &plan) {
    return {
        {"epsilon", plan.epsilon},
        {"good", plan.good.name()},
        {"iterations", plan.iterations},
        {"phase_s0", plan.phase_s0},
        {"phase_schi", plan.phase_schi},
        {"mode", mode_name(plan.mode)},
        {"warnings", plan.warnings},
    };
}

AmplificationPlan plan_from_json(const json &j) {
    auto good_name = field<std::string>(j, "good");
    GoodPredicate good = GoodPredicate::nonzero();
    if (good_name == "zero") {
        good = GoodPredicate::zero();
    } else if (good_name != "nonzero") {
        throw FormatError("verdict: plan predicate '" + good_name + "' cannot be restored from json");
    }
    auto mode = parse_mode(field<std::string>(j, "mode"));
    if (!mode) {
        throw FormatError("verdict: unknown plan mode");
    }
    return AmplificationPlan{
        field<double>(j, "epsilon"),
        good,
        field<uint64_t>(j, "iterations"),
        field<double>(j, "phase_s0"),
        field<double>(j, "phase_schi"),
        *mode,
        field<std::vector<std::string>>(j, "warnings")};
}

Decision decision_field(const json &j, const char *key) {
    auto d = parse_decision(field<std::string>(j, key));
    if (!d) {
        throw FormatError(std::string("verdict: unknown decision in '") + key + "'");
    }
    return *d;
}

}  // namespace

std::string booltest::report_to_csv(const ExperimentReport &report, bool with_timing) {
    std::ostringstream out;
    out << "problem,n,mode,epsilon,branch,quantum_success,quantum_queries,quantum_m,"
           "classical_success,classical_stderr,classical_trials,classical_mean_queries,classical_budget";
    if (with_timing) {
        out << ",quantum_elapsed_ms,classical_elapsed_ms";
    }
    out << "\n";
    const auto &c = report.config;
    for (const auto &cell : cells(report)) {
        const ExperimentRow &any = cell.quantum ? *cell.quantum : *cell.classical;
        out << problem_name(c.problem) << "," << c.n << "," << mode_name(c.mode) << "," << num(any.epsilon) << ","
            << any.branch << ",";
        if (cell.quantum) {
            out << num(cell.quantum->success) << "," << num(cell.quantum->mean_queries) << "," << cell.quantum->m_or_T;
        } else {
            out << ",,";
        }
        out << ",";
        if (cell.classical) {
            const auto &r = *cell.classical;
            out << num(r.success) << "," << (r.stderr_value ? num(*r.stderr_value) : "") << ","
                << (r.trials ? std::to_string(*r.trials) : "") << "," << num(r.mean_queries) << "," << r.m_or_T;
        } else {
            out << ",,,,";
        }
        if (with_timing) {
            out << "," << (cell.quantum ? num(cell.quantum->elapsed_ms) : "") << ","
                << (cell.classical ? num(cell.classical->elapsed_ms) : "");
        }
        out << "\n";
    }
    return out.str();
}

std::string booltest::report_to_json(const ExperimentReport &report, bool with_timing) {
    const auto &c = report.config;
    json rows = json::array();
    for (const auto &row : report.rows) {
        rows.push_back(row_to_json(row, with_timing));
    }
    json j = {
        {"schema", REPORT_SCHEMA},
        {"config",
         {
             {"problem", problem_name(c.problem)},
             {"n", c.n},
             {"epsilons", c.epsilons},
             {"trials", c.trials},
             {"base_seed", c.base_seed},
             {"mode", mode_name(c.mode)},
         }},
        {"rows", rows},
        {"slopes",
         {
             {"quantum", report.quantum_slope ? json(*report.quantum_slope) : json(nullptr)},
             {"classical", report.classical_slope ? json(*report.classical_slope) : json(nullptr)},
         }},
    };
    return j.dump(2) + "\n";
}

ExperimentReport booltest::report_from_json(const std::string &text) {
    json j = parse_document(text, REPORT_SCHEMA);
    ExperimentReport report{};
    const json &c = j.at("config");
    auto problem = parse_problem(field<std::string>(c, "problem"));
    auto mode = parse_mode(field<std::string>(c, "mode"));
    if (!problem || !mode) {
        throw FormatError("report: unknown problem or mode");
    }
    report.config = ExperimentConfig{
        *problem,
        field<size_t>(c, "n"),
        field<std::vector<double>>(c, "epsilons"),
        field<uint64_t>(c, "trials"),
        field<uint64_t>(c, "base_seed"),
        *mode};
    if (!j.contains("rows") || !j.at("rows").is_array()) {
        throw FormatError("report: missing rows array");
    }
    for (const auto &r : j.at("rows")) {
        report.rows.push_back(ExperimentRow{
            field<double>(r, "epsilon"),
            field<std::string>(r, "branch"),
            field<std::string>(r, "algorithm"),
            field<double>(r, "success"),
            optional_field<double>(r, "stderr"),
            optional_field<uint64_t>(r, "trials"),
            field<double>(r, "mean_queries"),
            field<uint64_t>(r, "m_or_T"),
            optional_field<double>(r, "elapsed_ms").value_or(0)});
    }
    const json &s = j.at("slopes");
    report.quantum_slope = optional_field<double>(s, "quantum");
    report.classical_slope = optional_field<double>(s, "classical");
    return report;
}

std::string booltest::report_to_text(const ExperimentReport &report, bool with_timing) {
    std::ostringstream out;
    const auto &c = report.config;
    out << "problem " << problem_name(c.problem) << "  n=" << c.n << "  mode=" << mode_name(c.mode)
        << "  trials=" << c.trials << "  seed=" << c.base_seed << "\n";
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %-10s %-9s %-12s %-10s %-14s %-10s%s\n", "epsilon", "branch", "algo",
                  "success", "stderr", "mean_queries", "m_or_T", with_timing ? " elapsed_ms" : "");
    out << line;
    for (const auto &r : report.rows) {
        std::string se = r.stderr_value ? num(*r.stderr_value).substr(0, 10) : "exact";
        std::snprintf(line, sizeof(line), "%-12.6g %-10s %-9s %-12.10f %-10s %-14.6f %-10llu", r.epsilon,
                      r.branch.c_str(), r.algorithm.c_str(), r.success, se.c_str(), r.mean_queries,
                      (unsigned long long)r.m_or_T);
        out << line;
        if (with_timing) {
            std::snprintf(line, sizeof(line), " %.3f", r.elapsed_ms);
            out << line;
        }
        out << "\n";
    }
    auto slope = [](const std::optional<double> &s) {
        return s ? num(*s) : std::string("n/a");
    };
    out << "slope quantum " << slope(report.quantum_slope) << "\n";
    out << "slope classical " << slope(report.classical_slope) << "\n";
    return out.str();
}

std::string booltest::verdict_to_json(const Verdict &v) {
    json probs = json::array();
    for (const auto &[d, p] : v.decision_probabilities) {
        probs.push_back({{"decision", decision_name(d)}, {"probability", p}});
    }
    json j = {
        {"schema", VERDICT_SCHEMA},
        {"decision", decision_name(v.decision)},
        {"measured_z", v.measured_z ? json(*v.measured_z) : json(nullptr)},
        {"decision_probabilities", probs},
        {"outcome_probabilities", v.outcome_probabilities},
        {"quantum_queries", v.quantum_queries},
        {"classical_queries", v.classical_queries},
        {"plan", v.plan ? plan_to_json(*v.plan) : json(nullptr)},
        {"seed", v.seed},
        {"estimate", v.estimate ? json(*v.estimate) : json(nullptr)},
    };
    return j.dump(2) + "\n";
}

Verdict booltest::verdict_from_json(const std::string &text) {
    json j = parse_document(text, VERDICT_SCHEMA);
    Verdict v{};
    v.decision = decision_field(j, "decision");
    v.measured_z = optional_field<uint64_t>(j, "measured_z");
    for (const auto &p : field<json>(j, "decision_probabilities")) {
        v.decision_probabilities.emplace_back(decision_field(p, "decision"), field<double>(p, "probability"));
    }
    v.outcome_probabilities = field<std::vector<double>>(j, "outcome_probabilities");
    v.quantum_queries = field<uint64_t>(j, "quantum_queries");
    v.classical_queries = field<uint64_t>(j, "classical_queries");
    if (j.contains("plan") && !j.at("plan").is_null()) {
        v.plan = plan_from_json(j.at("plan"));
    }
    v.seed = field<uint64_t>(j, "seed");
    v.estimate = optional_field<double>(j, "estimate");
    return v;
}
