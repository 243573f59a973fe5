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

#ifndef BOOLTEST_EXPERIMENT_H
#define BOOLTEST_EXPERIMENT_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "booltest/amplify.h"

namespace booltest {

enum class Problem { identity, correlation, balance, dj };

const char *problem_name(Problem p);
std::optional<Problem> parse_problem(const std::string &text);

struct ExperimentConfig {
    Problem problem = Problem::identity;
    size_t n = 12;
    /// Ignored for dj, which always runs at eps = 0.
    std::vector<double> epsilons;
    /// Monte Carlo repetitions for the classical testers.
    uint64_t trials = 1000;
    uint64_t base_seed = 1;
    PlanMode mode = PlanMode::bound;

    bool operator==(const ExperimentConfig &other) const = default;
};

/// One tester's result on one (epsilon, promise branch) cell.
struct ExperimentRow {
    double epsilon;
    /// Which side of the promise the instance satisfies (e.g. "identical", "far").
    std::string branch;
    /// "quantum" or "classical".
    std::string algorithm;
    /// Exact probability of a correct verdict, or the observed frequency.
    double success;
    /// Set only for frequency rows.
    std::optional<double> stderr_value;
    std::optional<uint64_t> trials;
    double mean_queries;
    /// Iteration count m (quantum) or sample budget r / T / worst-case count (classical).
    uint64_t m_or_T;
    /// Wall-clock time for the cell. Never serialized unless requested, so reports stay reproducible.
    double elapsed_ms = 0;

    bool exact() const {
        return !trials.has_value();
    }
    bool operator==(const ExperimentRow &other) const;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ExperimentRow> rows;
    /// Least-squares slope of log(queries) against log(eps), per algorithm.
    std::optional<double> quantum_slope;
    std::optional<double> classical_slope;

    bool operator==(const ExperimentReport &other) const = default;
};

/// Ordinary least-squares slope of log(queries) on log(eps).
/// Throws std::invalid_argument for fewer than 3 points, non-positive values, or
/// a degenerate (constant-eps) input.
double fit_slope(const std::vector<std::pair<double, double>> &points);

/// Checks that every eps can be realized exactly at the configured arity and that
/// no two cells would share a seed. Throws RepresentabilityError / std::invalid_argument.
void validate_config(const ExperimentConfig &config);

/// Generates promise-satisfying instances for each eps and branch, re-validates
/// them, runs the quantum tester (exact probabilities) and the classical tester
/// (Monte Carlo over `trials`), and fits query-count slopes.
ExperimentReport run_experiment(const ExperimentConfig &config);

/// Default sweep: eps = 2^-3 ... 2^-7.
std::vector<double> default_epsilons();

}  // namespace booltest

#endif
