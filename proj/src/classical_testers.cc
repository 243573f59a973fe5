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

#include "booltest/classical_testers.h"

#include <cmath>
#include <stdexcept>

#include "booltest/errors.h"
#include "booltest/generators.h"

using namespace booltest;

ClassicalConfig ClassicalConfig::for_epsilon(double epsilon) {
    if (!(epsilon > 0 && epsilon < 1)) {
        throw std::out_of_range("classical tester: epsilon must lie in (0, 1)");
    }
    ClassicalConfig c{};
    c.epsilon = epsilon;
    // The loop "r = 0; while r <= ln3/eps" runs floor(ln3/eps) + 1 times, which is
    // ceil(ln3/eps) for non-integral ln3/eps and ln3/eps + 1 otherwise.
    c.r_identity = uint64_t(std::floor(std::log(3.0) / epsilon)) + 1;
    c.T_balance = uint64_t(std::ceil(25.0 / (epsilon * epsilon) - 1e-9));
    c.delta = 0.1 * epsilon;
    c.threshold = 0.5 * epsilon;
    return c;
}

Verdict booltest::classical_identity(OracleHandle &f, OracleHandle &g, double epsilon, uint64_t seed) {
    require_same_arity(f.function(), g.function());
    ClassicalConfig config = ClassicalConfig::for_epsilon(epsilon);
    Rng rng(seed);
    std::uniform_int_distribution<uint64_t> point(0, f.function().size() - 1);

    Verdict v{};
    v.seed = seed;
    v.decision = Decision::identical;
    for (uint64_t r = 0; r < config.r_identity; r++) {
        uint64_t x = point(rng);
        bool fx = f.query(x);
        bool gx = g.query(x);
        v.classical_queries += 2;
        if (fx != gx) {
            v.decision = Decision::eps_far;
            break;
        }
    }
    return v;
}

Verdict booltest::classical_balance(OracleHandle &f, double epsilon, uint64_t seed) {
    ClassicalConfig config = ClassicalConfig::for_epsilon(epsilon);
    Rng rng(seed);
    std::uniform_int_distribution<uint64_t> point(0, f.function().size() - 1);

    int64_t total = 0;
    for (uint64_t t = 0; t < config.T_balance; t++) {
        total += f.query(point(rng)) ? -1 : 1;
    }
    Verdict v{};
    v.seed = seed;
    v.classical_queries = config.T_balance;
    v.estimate = double(total) / double(config.T_balance);
    v.decision = std::abs(*v.estimate) <= config.threshold ? Decision::balanced : Decision::eps_far_balanced;
    return v;
}

Verdict booltest::deterministic_correlation(OracleHandle &f, OracleHandle &g, double epsilon) {
    require_same_arity(f.function(), g.function());
    if (!(epsilon >= 0 && epsilon < 1)) {
        throw std::out_of_range("deterministic correlation: epsilon must lie in [0, 1)");
    }
    uint64_t n = f.function().size();
    size_t arity = f.arity();
    auto low_weight = weight_for_bias(arity, epsilon, +1);
    if (!low_weight) {
        double step = std::ldexp(1.0, 1 - int(arity));
        double lower = std::floor(epsilon / step) * step;
        throw RepresentabilityError(
            "deterministic correlation: (1 - eps) N / 2 is not an integer for this arity", lower, lower + step);
    }
    // Disagreement counts compatible with |C| = eps.
    uint64_t d_low = *low_weight;
    uint64_t d_high = n - d_low;

    Verdict v{};
    uint64_t agree = 0;
    uint64_t disagree = 0;
    auto one_alive = [&] {
        return agree == 0 || disagree == 0;
    };
    auto eps_alive = [&] {
        auto fits = [&](uint64_t d) {
            return disagree <= d && agree <= n - d;
        };
        return fits(d_low) || fits(d_high);
    };
    for (uint64_t x = 0; x < n; x++) {
        bool fx = f.query(x);
        bool gx = g.query(x);
        v.classical_queries += 2;
        (fx == gx ? agree : disagree)++;
        bool one = one_alive();
        bool eps = eps_alive();
        if (one != eps) {
            v.decision = one ? Decision::corr_one : Decision::corr_eps;
            return v;
        }
        if (!one) {
            break;
        }
    }
    v.decision = Decision::promise_violation;
    return v;
}
