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


// Acceptance checks, one numbered criterion per invocation:
//   acceptance_test 3        runs criterion 3
//   acceptance_test          runs all of them
// Each criterion prints detail lines followed by a single PASS/FAIL line, and the
// process exits nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "booltest/amplify.h"
#include "booltest/classical_testers.h"
#include "booltest/experiment.h"
#include "booltest/generators.h"
#include "booltest/quantum_testers.h"
#include "booltest/walsh.h"

using namespace booltest;

namespace {

constexpr double PI = std::numbers::pi;
constexpr double CERTAIN = 1e-10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects named sub-checks; the criterion passes iff all of them do.
struct Checks {
    bool ok = true;
    void check(bool pass, const std::string &what) {
        std::printf("  %-4s %s\n", pass ? "ok" : "FAIL", what.c_str());
        ok = ok && pass;
    }
};

std::string fmt(const char *format, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. Certainty branches at n = 12.

bool criterion_1() {
    Checks c;
    const size_t n = 12;
    Rng rng(derive_seed(2026, {1}));

    auto start = Clock::now();
    double worst = 1;
    bool counts = true;
    auto g = gen_random(n, rng);
    for (PlanMode mode : {PlanMode::bound, PlanMode::oracle}) {
        for (double eps : {1.0 / 15, 1.0 / 16, 1.0 / 64, 1.0 / 1024}) {
            OracleHandle f(g);
            OracleHandle h(g);
            auto v = test_identity(f, h, eps, mode, 1);
            worst = std::min(worst, v.probability(Decision::identical));
            counts = counts && v.quantum_queries == 4 * v.plan->iterations + 2;
        }
    }
    double t = seconds_since(start);
    c.check(worst >= 1 - CERTAIN && counts && t < 1,
            fmt("(a) identity, f = g: min P(identical) = %.17g over 8 runs, %.3f s", worst, t));

    start = Clock::now();
    std::vector<double> grid{0, 0.25, 0.5};
    for (int k = 0; k <= 13; k++) {
        grid.push_back(k / 16.0);
    }
    // Largest eps <= sqrt(3)/2 with (1 - eps) 2^(n-1) integral.
    double top = std::floor(CORRELATION_MAX_EPSILON * 2048) / 2048;
    grid.push_back(top);
    double max_far = 0;
    double min_one = 1;
    bool six = true;
    for (double eps : grid) {
        for (int sign : {1, -1}) {
            auto base = gen_random(n, rng);
            OracleHandle far(xor_functions(base, gen_with_bias(n, eps, sign, rng)));
            OracleHandle b1(base);
            auto v = test_correlation_exact(far, b1, eps, 2);
            max_far = std::max(max_far, v.probability(Decision::corr_one));
            OracleHandle one(sign > 0 ? base : base.complement());
            OracleHandle b2(base);
            auto w = test_correlation_exact(one, b2, eps, 3);
            min_one = std::min(min_one, w.probability(Decision::corr_one));
            six = six && v.quantum_queries == 6 && w.quantum_queries == 6;
        }
    }
    t = seconds_since(start);
    c.check(min_one >= 1 - CERTAIN && t < 1,
            fmt("(b) correlation, |C| = 1: min P(z=0) = %.17g, %.3f s", min_one, t));
    c.check(max_far <= CERTAIN,
            fmt("(b) correlation, |C| = eps over %.0f grid points up to %.6f: max P(z=0) = %.3g",
                double(grid.size()), top, max_far));
    c.check(six, "(b) correlation: every run used exactly 6 queries");
    c.check(std::abs(plan_correlation(CORRELATION_MAX_EPSILON).phase_s0 - PI) < 1e-7,
            fmt("(b) eps = sqrt(3)/2 gives phase %.17g (pi)", plan_correlation(CORRELATION_MAX_EPSILON).phase_s0));

    start = Clock::now();
    worst = 1;
    counts = true;
    std::vector<BooleanFunction> balanced{BooleanFunction::parity(n), gen_with_bias(n, 0, 1, rng)};
    for (const auto &fn : balanced) {
        for (PlanMode mode : {PlanMode::bound, PlanMode::oracle}) {
            for (double eps : {0.5, 0.125, 1.0 / 128}) {
                OracleHandle f(fn);
                auto v = test_balance(f, eps, mode, 4);
                worst = std::min(worst, v.probability(Decision::balanced));
                counts = counts && v.quantum_queries == 2 * v.plan->iterations + 1;
            }
        }
    }
    t = seconds_since(start);
    c.check(worst >= 1 - CERTAIN && counts && t < 1,
            fmt("(c) balance, C(f) = 0: min P(balanced) = %.17g over 12 runs, %.3f s", worst, t));
    return c.ok;
}

// ---------------------------------------------------------------------------
// 2. Bounded-error branches, bound mode, exact probabilities.

bool criterion_2() {
    Checks c;
    auto start = Clock::now();
    const size_t n = 10;
    const uint64_t N = 1024;
    Rng rng(derive_seed(2026, {2}));

    double eps = 1.0 / 32;
    uint64_t k_max = N / 15;
    double worst = 1;
    double worst_dist = 0;
    int failing = 0;
    int total = 0;
    uint64_t m = plan_identity(eps, PlanMode::bound).iterations;
    for (uint64_t k = N / 32; k <= k_max; k++) {
        auto g = gen_random(n, rng);
        OracleHandle f(gen_at_distance(g, k, rng));
        OracleHandle h(g);
        double p = test_identity(f, h, eps, PlanMode::bound, k).probability(Decision::eps_far);
        total++;
        failing += p < 0.75;
        if (p < worst) {
            worst = p;
            worst_dist = double(k) / N;
        }
    }
    c.check(failing == 0, fmt("identity eps=1/32, m=%.0f: %.0f of ", double(m), failing) +
                              std::to_string(total) +
                              fmt(" distances in [1/32, 1/15] reject with P < 3/4; min %.4f at Dist=%.6f", worst,
                                  worst_dist));

    eps = 1.0 / 8;
    m = plan_balance(eps, PlanMode::bound).iterations;
    worst = 1;
    double worst_bias = 0;
    failing = 0;
    total = 0;
    for (uint64_t k = N / 16; k <= N / 4; k++) {
        double bias_value = double(k) / (N / 2);
        for (int sign : {1, -1}) {
            OracleHandle f(gen_with_bias(n, bias_value, sign, rng));
            double p = test_balance(f, eps, PlanMode::bound, k).probability(Decision::eps_far_balanced);
            total++;
            failing += p < 0.75;
            if (p < worst) {
                worst = p;
                worst_bias = bias_value;
            }
        }
    }
    c.check(failing == 0, fmt("balance eps=1/8, m=%.0f: %.0f of ", double(m), failing) + std::to_string(total) +
                              fmt(" signed biases in [1/8, 1/2] reject with P < 3/4; min %.4f at |C|=%.6f", worst,
                                  worst_bias));

    // Reference only: the same sweeps with m computed from the true distance or bias.
    double oracle_worst = 1;
    for (uint64_t k = N / 32; k <= k_max; k++) {
        auto g = gen_random(n, rng);
        OracleHandle f(gen_at_distance(g, k, rng));
        OracleHandle h(g);
        oracle_worst = std::min(
            oracle_worst, test_identity(f, h, 1.0 / 32, PlanMode::oracle, k).probability(Decision::eps_far));
    }
    for (uint64_t k = N / 16; k <= N / 4; k++) {
        OracleHandle f(gen_with_bias(n, double(k) / (N / 2), 1, rng));
        oracle_worst = std::min(oracle_worst, test_balance(f, 1.0 / 8, PlanMode::oracle, k)
                                                  .probability(Decision::eps_far_balanced));
    }
    std::printf("  info oracle-mode iteration counts on the same ranges: min P(reject) = %.4f\n", oracle_worst);

    double t = seconds_since(start);
    c.check(t < 30, fmt("runtime %.2f s", t));
    return c.ok;
}

// ---------------------------------------------------------------------------
// 3. Classical testers, Monte Carlo.

bool criterion_3() {
    Checks c;
    auto start = Clock::now();
    const size_t n = 10;
    const int trials = 10000;
    const double target = 2.0 / 3;
    const double sigma = std::sqrt(target * (1 - target) / trials);
    Rng rng(derive_seed(2026, {3}));

    // Dist = 0.1 is not a multiple of 2^-10; use the nearest distance not below it.
    double eps = 0.1;
    uint64_t d = uint64_t(std::ceil(eps * 1024));
    auto g = gen_random(n, rng);
    auto f = gen_at_distance(g, d, rng);
    int rejects = 0;
    int false_rejects = 0;
    for (int t = 0; t < trials; t++) {
        OracleHandle fh(f);
        OracleHandle gh(g);
        rejects += classical_identity(fh, gh, eps, derive_seed(31, {uint64_t(t)})).decision == Decision::eps_far;
        OracleHandle a(g);
        OracleHandle b(g);
        false_rejects += classical_identity(a, b, eps, derive_seed(32, {uint64_t(t)})).decision == Decision::eps_far;
    }
    c.check(rejects >= (target - 3 * sigma) * trials,
            fmt("identity eps=0.1, Dist=%.6f: reject frequency %.4f (need >= %.4f)", double(d) / 1024,
                double(rejects) / trials, target - 3 * sigma));
    c.check(false_rejects == 0, fmt("identity, f = g: %.0f rejections in 10000 trials", false_rejects));

    eps = 0.2;
    // 0.2 is not a multiple of 2^-9 either; 103/512 is the nearest bias above it.
    double far_bias = std::ceil(eps * 512) / 512;
    auto balanced = gen_with_bias(n, 0, 1, rng);
    auto far_pos = gen_with_bias(n, far_bias, 1, rng);
    auto far_neg = gen_with_bias(n, far_bias, -1, rng);
    int ok_balanced = 0;
    int ok_far = 0;
    for (int t = 0; t < trials; t++) {
        OracleHandle b(balanced);
        ok_balanced += classical_balance(b, eps, derive_seed(33, {uint64_t(t)})).decision == Decision::balanced;
        OracleHandle fh(t % 2 ? far_pos : far_neg);
        ok_far += classical_balance(fh, eps, derive_seed(34, {uint64_t(t)})).decision == Decision::eps_far_balanced;
    }
    c.check(ok_balanced >= (target - 3 * sigma) * trials,
            fmt("balance eps=0.2, C(f)=0: correct frequency %.4f", double(ok_balanced) / trials));
    c.check(ok_far >= (target - 3 * sigma) * trials,
            fmt("balance eps=0.2, |C(f)|=%.6f: correct frequency %.4f", far_bias, double(ok_far) / trials));

    double t = seconds_since(start);
    c.check(t < 60, fmt("runtime %.2f s", t));
    return c.ok;
}

// ---------------------------------------------------------------------------
// 4. Query scaling.

uint64_t decider_queries(const BooleanFunction &f, const BooleanFunction &g, double eps, Decision expected,
                         bool &correct) {
    OracleHandle fh(f);
    OracleHandle gh(g);
    auto v = deterministic_correlation(fh, gh, eps);
    correct = correct && v.decision == expected;
    return v.classical_queries;
}

/// Table of g = 0 and f with the given disagreement positions: first `count`
/// indices when `front`, last `count` otherwise.
BooleanFunction block(size_t n, uint64_t count, bool front) {
    uint64_t N = uint64_t{1} << n;
    std::vector<bool> bits(N, false);
    for (uint64_t i = 0; i < count; i++) {
        bits[front ? i : N - 1 - i] = true;
    }
    return BooleanFunction::from_truth_table(bits, n);
}

bool criterion_4() {
    Checks c;
    auto start = Clock::now();

    struct Target {
        Problem problem;
        const char *algorithm;
        double slope;
    };
    std::vector<Target> targets{
        {Problem::identity, "quantum", -0.5}, {Problem::identity, "classical", -1.0},
        {Problem::balance, "quantum", -1.0},  {Problem::balance, "classical", -2.0},
        {Problem::correlation, "quantum", 0.0},
    };
    std::vector<ExperimentReport> reports;
    for (Problem p : {Problem::identity, Problem::balance, Problem::correlation}) {
        reports.push_back(run_experiment({p, 12, default_epsilons(), 1000, 2026, PlanMode::bound}));
    }
    for (const auto &target : targets) {
        for (const auto &r : reports) {
            if (r.config.problem != target.problem) {
                continue;
            }
            bool quantum = std::string(target.algorithm) == "quantum";
            auto slope = quantum ? r.quantum_slope : r.classical_slope;
            std::string queries;
            for (const auto &row : r.rows) {
                if (row.algorithm == target.algorithm && row.branch == r.rows.front().branch) {
                    queries += " " + fmt("%.6g", row.mean_queries);
                }
            }
            c.check(slope && std::abs(*slope - target.slope) <= 0.1,
                    std::string(problem_name(target.problem)) + " " + target.algorithm +
                        fmt(": slope %.4f (target %.1f)", slope.value_or(NAN), target.slope) + ", queries" +
                        queries);
        }
    }
    bool six = true;
    for (const auto &row : reports[2].rows) {
        six = six && (row.algorithm != "quantum" || row.mean_queries == 6);
    }
    c.check(six, "correlation quantum: exactly 6 queries at every eps");

    // Deterministic decider, adversarial orderings.
    for (size_t n : {4, 6, 8}) {
        uint64_t N = uint64_t{1} << n;
        bool exact = true;
        bool correct = true;
        int points = 0;
        auto zero = BooleanFunction::constant(n, false);
        for (uint64_t d_low = 1; d_low <= N / 2; d_low++) {
            double eps = 1 - 2.0 * double(d_low) / double(N);
            uint64_t d_high = N - d_low;
            uint64_t high = uint64_t((1 + eps) * N + 2);
            uint64_t low = uint64_t((1 - eps) * N + 2);
            uint64_t worst = 0;
            for (const auto &f : {zero, zero.complement()}) {
                worst = std::max(worst, decider_queries(f, zero, eps, Decision::corr_one, correct));
            }
            for (uint64_t ham : {d_low, d_high}) {
                for (bool front : {true, false}) {
                    worst = std::max(worst, decider_queries(block(n, ham, front), zero, eps, Decision::corr_eps,
                                                            correct));
                }
            }
            uint64_t short_run = decider_queries(block(n, d_high, false), zero, eps, Decision::corr_eps, correct);
            exact = exact && worst == high && short_run == low;
            points++;
        }
        c.check(exact && correct, "deterministic n=" + std::to_string(n) + ": worst case (1+eps)N+2 and the " +
                                      "agreements-first ordering (1-eps)N+2 at all " + std::to_string(points) +
                                      " representable eps");
    }
    {
        // Exhaustive at n = 4: no input under the promise costs more than (1+eps)N+2.
        bool bounded = true;
        bool correct = true;
        for (int k = 0; k < 8; k++) {
            double eps = k / 8.0;
            uint64_t worst = 0;
            for (uint64_t t = 0; t < (1u << 16); t++) {
                auto f = BooleanFunction::from_words({t}, 4);
                double cf = std::abs(bias(f));
                if (cf != 1 && cf != eps) {
                    continue;
                }
                worst = std::max(worst, decider_queries(f, BooleanFunction::constant(4, false), eps,
                                                        cf == 1 ? Decision::corr_one : Decision::corr_eps, correct));
            }
            bounded = bounded && worst == uint64_t((1 + eps) * 16 + 2);
        }
        c.check(bounded && correct, "deterministic n=4 exhaustive: zero error, max queries (1+eps)N+2");
    }

    double t = seconds_since(start);
    c.check(t < 300, fmt("runtime %.2f s", t));
    return c.ok;
}

// ---------------------------------------------------------------------------
// 5. Algebraic identities.

std::pair<std::vector<Amplitude>, std::vector<Amplitude>> split(const StateVector &s, const GoodPredicate &good) {
    std::vector<Amplitude> g(s.size());
    std::vector<Amplitude> b(s.size());
    for (uint64_t z = 0; z < s.size(); z++) {
        (good(z) ? g : b)[z] = s[z];
    }
    return {g, b};
}

double deviation(const StateVector &s, const std::vector<Amplitude> &expected) {
    double worst = 0;
    for (uint64_t z = 0; z < s.size(); z++) {
        worst = std::max(worst, std::abs(s[z] - expected[z]));
    }
    return worst;
}

bool criterion_5() {
    Checks c;
    Rng rng(derive_seed(2026, {5}));
    std::uniform_real_distribution<double> phase(-PI, PI);

    double worst = 0;
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng() % 8;
        OracleHandle f(gen_random(n, rng));
        OracleHandle g(gen_random(n, rng));
        StatePreparation prep({f, g});
        GoodPredicate good = t % 2 ? GoodPredicate::nonzero() : GoodPredicate::zero();
        double vphi = phase(rng);
        double phi = phase(rng);
        auto psi = prepare_A(prep);
        auto [p1, p0] = split(psi, good);
        double a = good_probability(psi, good);
        Amplitude ev = std::polar(1.0, vphi);
        Amplitude ep = std::polar(1.0, phi);
        Amplitude c11 = ep * ((1.0 - ev) * a - 1.0);
        Amplitude c10 = ep * (1.0 - ev) * a;
        Amplitude c01 = (1.0 - ev) * (1.0 - a);
        Amplitude c00 = -((1.0 - ev) * a + ev);
        auto q1 = StateVector::from_amplitudes(n, p1);
        auto q0 = StateVector::from_amplitudes(n, p0);
        apply_Q(q1, prep, good, vphi, phi);
        apply_Q(q0, prep, good, vphi, phi);
        std::vector<Amplitude> e1(psi.size());
        std::vector<Amplitude> e0(psi.size());
        for (uint64_t z = 0; z < psi.size(); z++) {
            e1[z] = c11 * p1[z] + c10 * p0[z];
            e0[z] = c01 * p1[z] + c00 * p0[z];
        }
        worst = std::max({worst, deviation(q1, e1), deviation(q0, e0)});
    }
    c.check(worst <= 1e-10, fmt("Q on good/bad components, 200 random (f, g, phases): max deviation %.3g", worst));

    worst = 0;
    int instances = 0;
    while (instances < 40) {
        size_t n = 2 + rng() % 9;
        auto g = gen_random(n, rng);
        uint64_t N = uint64_t{1} << n;
        OracleHandle fh(gen_at_distance(g, 1 + rng() % (N - 1), rng));
        OracleHandle gh(g);
        StatePreparation prep({fh, gh});
        auto good = GoodPredicate::nonzero();
        auto state = prepare_A(prep);
        double a = good_probability(state, good);
        if (a == 0 || a == 1) {
            continue;
        }
        instances++;
        auto [p1, p0] = split(state, good);
        double theta = std::asin(std::sqrt(a));
        for (int j = 0; j <= 5; j++) {
            std::vector<Amplitude> expected(state.size());
            for (uint64_t z = 0; z < state.size(); z++) {
                expected[z] = std::sin((2 * j + 1) * theta) / std::sqrt(a) * p1[z] +
                              std::cos((2 * j + 1) * theta) / std::sqrt(1 - a) * p0[z];
            }
            worst = std::max(worst, deviation(state, expected));
            apply_Q(state, prep, good, PI, PI);
        }
    }
    c.check(worst <= 1e-10, fmt("Q^j A|0> closed form, j <= 5, 40 instances: max deviation %.3g", worst));

    double parseval = 0;
    bool fwht = true;
    for (uint64_t t = 0; t < 256; t++) {
        auto f = BooleanFunction::from_words({t}, 3);
        auto w = walsh_spectrum_fast(f);
        fwht = fwht && w == walsh_spectrum_naive(f);
        double s = 0;
        for (double x : w.coefficients()) {
            s += x * x;
        }
        parseval = std::max(parseval, std::abs(s - 1));
    }
    double dist_gap = 0;
    for (uint64_t a = 0; a < 256; a++) {
        for (uint64_t b = 0; b < 256; b++) {
            auto f = BooleanFunction::from_words({a}, 3);
            auto g = BooleanFunction::from_words({b}, 3);
            dist_gap = std::max(dist_gap, std::abs(correlation(f, g) - (1 - 2 * dist(f, g))));
        }
    }
    c.check(parseval <= 1e-12 && dist_gap <= 1e-12,
            fmt("n=3 exhaustive: Parseval deviation %.3g, |C - (1 - 2 Dist)| %.3g", parseval, dist_gap));
    c.check(fwht, "n=3 exhaustive: fast transform equals the definition on all 256 functions");

    parseval = 0;
    dist_gap = 0;
    for (size_t n : {10, 11, 12}) {
        for (int t = 0; t < 30; t++) {
            auto f = gen_random(n, rng);
            auto g = gen_random(n, rng);
            double s = 0;
            for (double x : walsh_spectrum_fast(f).coefficients()) {
                s += x * x;
            }
            parseval = std::max(parseval, std::abs(s - 1));
            dist_gap = std::max(dist_gap, std::abs(correlation(f, g) - (1 - 2 * dist(f, g))));
        }
    }
    c.check(parseval <= 1e-12 && dist_gap <= 1e-12,
            fmt("n=10..12 random: Parseval deviation %.3g, |C - (1 - 2 Dist)| %.3g", parseval, dist_gap));
    return c.ok;
}

}  // namespace

int main(int argc, char **argv) {
    struct Criterion {
        const char *title;
        std::function<bool()> run;
    };
    std::vector<Criterion> criteria{
        {"certainty branches", criterion_1},
        {"bounded-error branches (bound mode)", criterion_2},
        {"classical testers", criterion_3},
        {"query scaling", criterion_4},
        {"algebraic identities", criterion_5},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; i++) {
        int k = std::atoi(argv[i]);
        if (k < 1 || k > int(criteria.size())) {
            std::fprintf(stderr, "usage: acceptance_test [1-5 ...]\n");
            return 2;
        }
        selected.push_back(k);
    }
    if (selected.empty()) {
        for (int k = 1; k <= int(criteria.size()); k++) {
            selected.push_back(k);
        }
    }
    bool all = true;
    for (int k : selected) {
        std::printf("criterion %d: %s\n", k, criteria[k - 1].title);
        bool pass = criteria[k - 1].run();
        std::printf("%s criterion %d\n", pass ? "PASS" : "FAIL", k);
        std::fflush(stdout);
        all = all && pass;
    }
    return all ? 0 : 1;
}
