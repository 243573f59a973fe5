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

#ifndef BOOLTEST_CLASSICAL_TESTERS_H
#define BOOLTEST_CLASSICAL_TESTERS_H

#include <cstdint>

#include "booltest/oracle.h"
#include "booltest/verdict.h"

namespace booltest {

/// Sample sizes and thresholds of the classical testers for a given epsilon.
struct ClassicalConfig {
    double epsilon;
    /// Sampled points in the identity tester: the smallest integer r > ln(3)/eps,
    /// which makes (1 - eps)^r < 1/3.
    uint64_t r_identity;
    /// Sample count of the balancedness tester: ceil(25 / eps^2). With
    /// delta = 0.1 eps and c(1 - c) <= 1/4 this gives delta T / sqrt(T c (1 - c)) >= 1.
    uint64_t T_balance;
    double delta;
    /// |C'| <= threshold means "balanced"; threshold = 0.5 eps = 5 delta.
    double threshold;

    static ClassicalConfig for_epsilon(double epsilon);
};

/// Samples up to r_identity uniform points (with replacement) and reports eps_far
/// at the first disagreement. Each point costs one query per function.
Verdict classical_identity(OracleHandle &f, OracleHandle &g, double epsilon, uint64_t seed);

/// Estimates C'(f) = (1/T) sum (-1)^f(x_i) from T_balance i.i.d. uniform points and
/// reports balanced iff |C'| <= 0.5 eps.
Verdict classical_balance(OracleHandle &f, double epsilon, uint64_t seed);

/// Zero-error decider for |C(f, g)| = 1 versus |C(f, g)| = eps.
///
/// Walks inputs in index order counting agreements A and disagreements D. The
/// "one" branch stays consistent while A == 0 or D == 0; the "eps" branch while
/// some final disagreement count d in {(1-eps)N/2, (1+eps)N/2} has D <= d and
/// A <= N - d. Stops as soon as exactly one branch is consistent; if neither is,
/// the verdict is promise_violation. Never exceeds (1 + eps)N + 2 queries.
/// Throws RepresentabilityError unless (1 - eps)N/2 is an integer.
Verdict deterministic_correlation(OracleHandle &f, OracleHandle &g, double epsilon);

}  // namespace booltest

#endif
