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

#ifndef BOOLTEST_VERDICT_H
#define BOOLTEST_VERDICT_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "booltest/amplify.h"

namespace booltest {

enum class Decision {
    identical,
    eps_far,
    corr_one,
    corr_eps,
    balanced,
    eps_far_balanced,
    promise_violation,
};

const char *decision_name(Decision d);
std::optional<Decision> parse_decision(const std::string &text);

/// Outcome of one tester run.
struct Verdict {
    Decision decision;
    /// Sampled measurement outcome (quantum testers only).
    std::optional<uint64_t> measured_z;
    /// Exact probability of each possible decision, computed from amplitudes.
    /// Empty for Monte Carlo testers.
    std::vector<std::pair<Decision, double>> decision_probabilities;
    /// Full |amplitude|^2 table, kept only on request.
    std::vector<double> outcome_probabilities;
    uint64_t quantum_queries = 0;
    uint64_t classical_queries = 0;
    std::optional<AmplificationPlan> plan;
    uint64_t seed = 0;
    /// Normalized sample correlation C' (classical balancedness tester).
    std::optional<double> estimate;

    /// Exact probability that the tester outputs `d`; throws if not available.
    double probability(Decision d) const;
};

}  // namespace booltest

#endif
