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

#ifndef BOOLTEST_QUANTUM_TESTERS_H
#define BOOLTEST_QUANTUM_TESTERS_H

#include <cstdint>
#include <optional>

#include "booltest/amplify.h"
#include "booltest/oracle.h"
#include "booltest/verdict.h"

namespace booltest {

/// Largest distance for which the identity tester's 3/4 guarantee is argued.
constexpr double IDENTITY_GUARANTEE_MAX_EPSILON = 1.0 / 15.0;
/// Largest |C(f, g)| the exact correlation tester accepts: sqrt(3)/2.
constexpr double CORRELATION_MAX_EPSILON = 0.86602540378443864676;

/// Iteration plan for the identity tester.
///
/// bound:  a_lb = 4 eps - 4 eps^2 (the smallest initial success probability any
///         eps-far pair can have), m = floor(pi / (4 arcsin sqrt(a_lb))).
/// oracle: a = 1 - (1 - 2 true_dist)^2 from the actual distance.
/// Good states are z != 0, both phases pi. Epsilon outside (0, 1/15] produces a
/// plan with a warning rather than an error.
AmplificationPlan plan_identity(double epsilon, PlanMode mode, std::optional<double> true_dist = std::nullopt);

/// Single-iteration plan with phi_0 = phi_chi = 2 arcsin(1 / (2 sqrt(1 - eps^2))).
AmplificationPlan plan_correlation(double epsilon);

/// Iteration plan for the balancedness tester: good state z == 0, phases pi,
/// bound m = floor(pi / (4 arcsin eps)), oracle a = true_bias^2.
AmplificationPlan plan_balance(double epsilon, PlanMode mode, std::optional<double> true_bias = std::nullopt);

struct QuantumRunOptions {
    /// Keep the full |amplitude|^2 table in the verdict.
    bool keep_distribution = false;
};

/// Decides f == g versus Dist(f, g) >= eps. Output "identical" iff the measured z is 0.
/// Uses exactly 4m + 2 quantum queries.
Verdict test_identity(OracleHandle &f, OracleHandle &g, double epsilon, PlanMode mode, uint64_t seed,
                      QuantumRunOptions options = {});

/// Decides |C(f, g)| = 1 versus |C(f, g)| = eps with certainty; "corr_one" iff z is 0.
/// Uses exactly 6 quantum queries.
Verdict test_correlation_exact(OracleHandle &f, OracleHandle &g, double epsilon, uint64_t seed,
                               QuantumRunOptions options = {});

/// Decides C(f) = 0 versus |C(f)| >= eps. Output "balanced" iff the measured z is nonzero.
/// Uses exactly 2m + 1 quantum queries.
Verdict test_balance(OracleHandle &f, double epsilon, PlanMode mode, uint64_t seed, QuantumRunOptions options = {});

}  // namespace booltest

#endif
