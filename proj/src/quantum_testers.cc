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

#include "booltest/quantum_testers.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "booltest/errors.h"

using namespace booltest;

namespace {

uint64_t total_queries(const OracleHandle &f, const OracleHandle *g) {
    uint64_t q = f.quantum_queries();
    if (g != nullptr && g != &f) {
        q += g->quantum_queries();
    }
    return q;
}

void check_query_count(uint64_t used, uint64_t expected, const char *algorithm) {
    if (used != expected) {
        std::ostringstream msg;
        msg << algorithm << " used " << used << " quantum queries, expected " << expected;
        throw std::logic_error(msg.str());
    }
}

/// Runs Q^m A|0>, samples z, and fills the parts of the verdict common to all testers.
/// Returns the exact probability of measuring z = 0 alongside.
std::pair<Verdict, double> run_plan(const StatePreparation &prep, const AmplificationPlan &plan, uint64_t seed,
                 const QuantumRunOptions &options) {
    StateVector state = amplified_state(prep, plan);
    Rng rng(seed);
    Verdict v{};
    v.measured_z = state.sample(rng);
    v.seed = seed;
    v.plan = plan;
    if (options.keep_distribution) {
        v.outcome_probabilities = state.probabilities();
    }
    return {std::move(v), std::norm(state[0])};
}

void set_decisions(Verdict &v, double p_zero, Decision on_zero, Decision on_nonzero) {
    v.decision_probabilities = {{on_zero, p_zero}, {on_nonzero, 1.0 - p_zero}};
    v.decision = *v.measured_z == 0 ? on_zero : on_nonzero;
}

}  // namespace

AmplificationPlan booltest::plan_identity(double epsilon, PlanMode mode, std::optional<double> true_dist) {
    if (!(epsilon > 0 && epsilon < 1)) {
        throw std::out_of_range("identity tester: epsilon must lie in (0, 1)");
    }
    AmplificationPlan plan{epsilon, GoodPredicate::nonzero(), 0, std::numbers::pi, std::numbers::pi, mode, {}};
    if (epsilon > IDENTITY_GUARANTEE_MAX_EPSILON) {
        plan.warnings.push_back("epsilon > 1/15: the 3/4 success guarantee does not apply");
    }
    double a;
    if (mode == PlanMode::bound) {
        a = 4 * epsilon - 4 * epsilon * epsilon;
    } else {
        if (!true_dist) {
            throw std::invalid_argument("identity tester: oracle mode needs the true distance");
        }
        if (!(*true_dist >= 0 && *true_dist <= 1)) {
            throw std::out_of_range("identity tester: distance must lie in [0, 1]");
        }
        double w0 = 1 - 2 * *true_dist;
        a = 1 - w0 * w0;
        if (a == 0) {
            plan.warnings.push_back("initial success probability is 0; no amplification applied");
        }
    }
    plan.iterations = iterations_for_probability(std::min(a, 1.0));
    return plan;
}

AmplificationPlan booltest::plan_correlation(double epsilon) {
    if (!(epsilon >= 0 && epsilon <= CORRELATION_MAX_EPSILON + 1e-12)) {
        throw std::out_of_range("correlation tester: epsilon must lie in [0, sqrt(3)/2]");
    }
    double arg = 1 / (2 * std::sqrt(1 - epsilon * epsilon));
    double phase = 2 * std::asin(std::min(arg, 1.0));
    return AmplificationPlan{epsilon, GoodPredicate::nonzero(), 1, phase, phase, PlanMode::bound, {}};
}

AmplificationPlan booltest::plan_balance(double epsilon, PlanMode mode, std::optional<double> true_bias) {
    if (!(epsilon > 0 && epsilon <= 0.5)) {
        throw std::out_of_range("balance tester: epsilon must lie in (0, 1/2]");
    }
    AmplificationPlan plan{epsilon, GoodPredicate::zero(), 0, std::numbers::pi, std::numbers::pi, mode, {}};
    if (mode == PlanMode::bound) {
        plan.iterations = uint64_t(std::floor(std::numbers::pi / (4 * std::asin(epsilon)) + 1e-9));
    } else {
        if (!true_bias) {
            throw std::invalid_argument("balance tester: oracle mode needs the true bias");
        }
        double a = *true_bias * *true_bias;
        if (a == 0) {
            plan.warnings.push_back("initial success probability is 0; no amplification applied");
        }
        plan.iterations = iterations_for_probability(std::min(a, 1.0));
    }
    return plan;
}

Verdict booltest::test_identity(OracleHandle &f, OracleHandle &g, double epsilon, PlanMode mode, uint64_t seed,
                                QuantumRunOptions options) {
    require_same_arity(f.function(), g.function());
    std::optional<double> true_dist;
    if (mode == PlanMode::oracle) {
        true_dist = dist(f.function(), g.function());
    }
    AmplificationPlan plan = plan_identity(epsilon, mode, true_dist);
    StatePreparation prep({f, g});

    uint64_t before = total_queries(f, &g);
    auto [v, p_zero] = run_plan(prep, plan, seed, options);
    v.quantum_queries = total_queries(f, &g) - before;
    check_query_count(v.quantum_queries, 4 * plan.iterations + 2, "identity tester");
    set_decisions(v, p_zero, Decision::identical, Decision::eps_far);
    return v;
}

Verdict booltest::test_correlation_exact(OracleHandle &f, OracleHandle &g, double epsilon, uint64_t seed,
                                         QuantumRunOptions options) {
    require_same_arity(f.function(), g.function());
    AmplificationPlan plan = plan_correlation(epsilon);
    StatePreparation prep({f, g});

    uint64_t before = total_queries(f, &g);
    auto [v, p_zero] = run_plan(prep, plan, seed, options);
    v.quantum_queries = total_queries(f, &g) - before;
    check_query_count(v.quantum_queries, 6, "correlation tester");
    set_decisions(v, p_zero, Decision::corr_one, Decision::corr_eps);
    return v;
}

Verdict booltest::test_balance(OracleHandle &f, double epsilon, PlanMode mode, uint64_t seed,
                               QuantumRunOptions options) {
    std::optional<double> true_bias;
    if (mode == PlanMode::oracle) {
        true_bias = bias(f.function());
    }
    AmplificationPlan plan = plan_balance(epsilon, mode, true_bias);
    StatePreparation prep({f});

    uint64_t before = total_queries(f, nullptr);
    auto [v, p_zero] = run_plan(prep, plan, seed, options);
    v.quantum_queries = total_queries(f, nullptr) - before;
    check_query_count(v.quantum_queries, 2 * plan.iterations + 1, "balance tester");
    set_decisions(v, p_zero, Decision::eps_far_balanced, Decision::balanced);
    return v;
}
