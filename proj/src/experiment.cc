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

#include "booltest/experiment.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "booltest/classical_testers.h"
#include "booltest/errors.h"
#include "booltest/generators.h"
#include "booltest/quantum_testers.h"
#include "booltest/walsh.h"

using namespace booltest;

const char *booltest::problem_name(Problem p) {
    switch (p) {
        case Problem::identity:
            return "identity";
        case Problem::correlation:
            return "correlation";
        case Problem::balance:
            return "balance";
        default:
            return "dj";
    }
}

std::optional<Problem> booltest::parse_problem(const std::string &text) {
    for (Problem p : {Problem::identity, Problem::correlation, Problem::balance, Problem::dj}) {
        if (text == problem_name(p)) {
            return p;
        }
    }
    return std::nullopt;
}

bool ExperimentRow::operator==(const ExperimentRow &other) const {
    return epsilon == other.epsilon && branch == other.branch && algorithm == other.algorithm &&
           success == other.success && stderr_value == other.stderr_value && trials == other.trials &&
           mean_queries == other.mean_queries && m_or_T == other.m_or_T;
}

std::vector<double> booltest::default_epsilons() {
    return {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
}

double booltest::fit_slope(const std::vector<std::pair<double, double>> &points) {
    if (points.size() < 3) {
        throw std::invalid_argument("fit_slope: need at least 3 points");
    }
    double mx = 0;
    double my = 0;
    for (const auto &[eps, q] : points) {
        if (!(eps > 0) || !(q > 0)) {
            throw std::invalid_argument("fit_slope: epsilons and query counts must be positive");
        }
        mx += std::log(eps);
        my += std::log(q);
    }
    mx /= double(points.size());
    my /= double(points.size());
    double sxx = 0;
    double sxy = 0;
    for (const auto &[eps, q] : points) {
        double dx = std::log(eps) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(q) - my);
    }
    if (sxx == 0) {
        throw std::invalid_argument("fit_slope: all epsilons are equal");
    }
    return sxy / sxx;
}

namespace {

struct Instance {
    BooleanFunction f;
    std::optional<BooleanFunction> g;
};

struct Branch {
    std::string name;
    Decision expected;
    std::function<Instance(Rng &)> make;
};

int random_sign(Rng &rng) {
    return (rng() & 1) ? 1 : -1;
}

std::vector<double> effective_epsilons(const ExperimentConfig &config) {
    if (config.problem == Problem::dj) {
        return {0.0};
    }
    return config.epsilons;
}

std::vector<Branch> branches_for(const ExperimentConfig &config, double eps) {
    size_t n = config.n;
    switch (config.problem) {
        case Problem::identity: {
            uint64_t d = uint64_t(std::ldexp(eps, int(n)));
            return {
                {"identical", Decision::identical,
                 [n](Rng &rng) {
                     auto g = gen_random(n, rng);
                     return Instance{g, g};
                 }},
                {"far", Decision::eps_far,
                 [n, d](Rng &rng) {
                     auto g = gen_random(n, rng);
                     auto f = gen_at_distance(g, d, rng);
                     return Instance{f, g};
                 }},
            };
        }
        case Problem::correlation:
            return {
                {"one", Decision::corr_one,
                 [n](Rng &rng) {
                     auto g = gen_random(n, rng);
                     auto f = random_sign(rng) > 0 ? g : g.complement();
                     return Instance{f, g};
                 }},
                {"eps", Decision::corr_eps,
                 [n, eps](Rng &rng) {
                     auto g = gen_random(n, rng);
                     auto h = gen_with_bias(n, eps, random_sign(rng), rng);
                     return Instance{xor_functions(g, h), g};
                 }},
            };
        case Problem::balance:
            return {
                {"balanced", Decision::balanced,
                 [n](Rng &rng) {
                     return Instance{gen_with_bias(n, 0.0, 1, rng), std::nullopt};
                 }},
                {"far", Decision::eps_far_balanced,
                 [n, eps](Rng &rng) {
                     return Instance{gen_with_bias(n, eps, random_sign(rng), rng), std::nullopt};
                 }},
            };
        default:
            return {
                {"constant", Decision::corr_one,
                 [n](Rng &rng) {
                     return Instance{BooleanFunction::constant(n, random_sign(rng) > 0), BooleanFunction::constant(n, false)};
                 }},
                {"balanced", Decision::corr_eps,
                 [n](Rng &rng) {
                     return Instance{gen_with_bias(n, 0.0, 1, rng), BooleanFunction::constant(n, false)};
                 }},
            };
    }
}

/// Exact re-check of the promise an instance was generated for.
void validate_instance(const ExperimentConfig &config, double eps, const Branch &branch, const Instance &inst) {
    bool ok;
    switch (config.problem) {
        case Problem::identity: {
            double d = dist(inst.f, *inst.g);
            ok = branch.expected == Decision::identical ? d == 0 : d == eps;
            break;
        }
        case Problem::balance: {
            double c = std::abs(bias(inst.f));
            ok = branch.expected == Decision::balanced ? c == 0 : c == eps;
            break;
        }
        default: {
            // C(f, g) is W_{f xor g}(0), computed here through the spectrum as an independent route.
            double c = std::abs(walsh_spectrum_fast(xor_functions(inst.f, *inst.g))[0]);
            ok = branch.expected == Decision::corr_one ? c == 1 : c == eps;
            break;
        }
    }
    if (!ok) {
        std::ostringstream msg;
        msg << "generated " << problem_name(config.problem) << " instance violates the '" << branch.name
            << "' promise at eps=" << eps;
        throw PromiseError(msg.str());
    }
}

uint64_t cell_seed(const ExperimentConfig &config, double eps, size_t branch_index) {
    return derive_seed(
        config.base_seed, {uint64_t(config.problem), std::bit_cast<uint64_t>(eps), uint64_t(branch_index)});
}

struct TrialTally {
    uint64_t successes = 0;
    uint64_t queries = 0;
};

/// Runs fn(trial) -> {success, queries} for every trial across worker threads.
/// The tally is an integer sum, so the result does not depend on scheduling.
TrialTally run_trials(uint64_t trials, const std::function<std::pair<bool, uint64_t>(uint64_t)> &fn) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = unsigned(std::min<uint64_t>(workers, trials));
    std::vector<TrialTally> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; w++) {
        threads.emplace_back([&, w] {
            try {
                for (uint64_t t = w; t < trials; t += workers) {
                    auto [ok, q] = fn(t);
                    partial[w].successes += ok;
                    partial[w].queries += q;
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    TrialTally total;
    for (unsigned w = 0; w < workers; w++) {
        if (errors[w]) {
            std::rethrow_exception(errors[w]);
        }
        total.successes += partial[w].successes;
        total.queries += partial[w].queries;
    }
    return total;
}

ExperimentRow quantum_row(const ExperimentConfig &config, double eps, const Branch &branch, const Instance &inst,
                          uint64_t seed) {
    OracleHandle f(inst.f);
    Verdict v;
    switch (config.problem) {
        case Problem::identity: {
            OracleHandle g(*inst.g);
            v = test_identity(f, g, eps, config.mode, seed);
            break;
        }
        case Problem::balance:
            v = test_balance(f, eps, config.mode, seed);
            break;
        default: {
            OracleHandle g(*inst.g);
            v = test_correlation_exact(f, g, eps, seed);
            break;
        }
    }
    return ExperimentRow{
        eps, branch.name, "quantum", v.probability(branch.expected), std::nullopt, std::nullopt,
        double(v.quantum_queries), v.plan->iterations, 0};
}

ExperimentRow classical_row(const ExperimentConfig &config, double eps, const Branch &branch, const Instance &inst,
                            uint64_t seed) {
    uint64_t budget = 0;
    std::function<std::pair<bool, uint64_t>(uint64_t)> trial;
    switch (config.problem) {
        case Problem::identity:
            budget = ClassicalConfig::for_epsilon(eps).r_identity;
            trial = [&](uint64_t t) {
                OracleHandle f(inst.f);
                OracleHandle g(*inst.g);
                Verdict v = classical_identity(f, g, eps, derive_seed(seed, {t}));
                return std::pair{v.decision == branch.expected, v.classical_queries};
            };
            break;
        case Problem::balance:
            budget = ClassicalConfig::for_epsilon(eps).T_balance;
            trial = [&](uint64_t t) {
                OracleHandle f(inst.f);
                Verdict v = classical_balance(f, eps, derive_seed(seed, {t}));
                return std::pair{v.decision == branch.expected, v.classical_queries};
            };
            break;
        default: {
            // Deterministic: vary the instance instead of the sampling seed.
            uint64_t d_high = inst.f.size() - *weight_for_bias(config.n, eps, +1);
            budget = 2 * d_high + 2;
            trial = [&](uint64_t t) {
                Rng rng(derive_seed(seed, {t}));
                Instance fresh = branch.make(rng);
                validate_instance(config, eps, branch, fresh);
                OracleHandle f(fresh.f);
                OracleHandle g(*fresh.g);
                Verdict v = deterministic_correlation(f, g, eps);
                return std::pair{v.decision == branch.expected, v.classical_queries};
            };
            break;
        }
    }
    TrialTally tally = run_trials(config.trials, trial);
    double p = double(tally.successes) / double(config.trials);
    double se = std::sqrt(p * (1 - p) / double(config.trials));
    return ExperimentRow{
        eps, branch.name, "classical", p, se, config.trials, double(tally.queries) / double(config.trials), budget, 0};
}

std::optional<double> slope_for(const std::vector<ExperimentRow> &rows, const std::string &algorithm) {
    std::map<double, double> worst;
    for (const auto &r : rows) {
        if (r.algorithm == algorithm) {
            worst[r.epsilon] = std::max(worst[r.epsilon], r.mean_queries);
        }
    }
    if (worst.size() < 3 || worst.begin()->first <= 0) {
        return std::nullopt;
    }
    return fit_slope(std::vector<std::pair<double, double>>(worst.begin(), worst.end()));
}

}  // namespace

void booltest::validate_config(const ExperimentConfig &config) {
    check_arity(config.n, MAX_STATE_ARITY);
    if (config.trials == 0) {
        throw std::invalid_argument("experiment: trials must be positive");
    }
    if (config.problem == Problem::dj) {
        for (double e : config.epsilons) {
            if (e != 0) {
                throw std::invalid_argument("experiment: dj runs at eps = 0 only");
            }
        }
    } else if (config.epsilons.empty()) {
        throw std::invalid_argument("experiment: no epsilons given");
    }

    std::vector<std::string> bad;
    double step = 0;
    double first_lower = 0;
    for (double eps : effective_epsilons(config)) {
        bool representable = true;
        switch (config.problem) {
            case Problem::identity: {
                if (!(eps > 0 && eps < 1)) {
                    throw std::out_of_range("experiment: identity eps must lie in (0, 1)");
                }
                double d = std::ldexp(eps, int(config.n));
                representable = d == std::floor(d);
                step = std::ldexp(1.0, -int(config.n));
                break;
            }
            case Problem::correlation:
                if (!(eps >= 0 && eps <= CORRELATION_MAX_EPSILON)) {
                    throw std::out_of_range("experiment: correlation eps must lie in [0, sqrt(3)/2]");
                }
                representable = weight_for_bias(config.n, eps, +1).has_value();
                step = std::ldexp(1.0, 1 - int(config.n));
                break;
            case Problem::balance:
                if (!(eps > 0 && eps <= 0.5)) {
                    throw std::out_of_range("experiment: balance eps must lie in (0, 1/2]");
                }
                representable = weight_for_bias(config.n, eps, +1).has_value();
                step = std::ldexp(1.0, 1 - int(config.n));
                break;
            default:
                break;
        }
        if (!representable) {
            std::ostringstream msg;
            msg.precision(17);
            double lower = std::floor(eps / step) * step;
            if (bad.empty()) {
                first_lower = lower;
            }
            msg << eps << " (try " << lower << " or " << lower + step << ")";
            bad.push_back(msg.str());
        }
    }
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "epsilon not representable at n=" << config.n << ":";
        for (const auto &b : bad) {
            msg << " " << b << ";";
        }
        throw RepresentabilityError(msg.str(), first_lower, first_lower + step);
    }

    std::set<uint64_t> seeds;
    for (double eps : effective_epsilons(config)) {
        for (size_t b = 0; b < 2; b++) {
            if (!seeds.insert(cell_seed(config, eps, b)).second) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "seed reuse: eps=" << eps << " appears more than once, its cells would share a seed";
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

ExperimentReport booltest::run_experiment(const ExperimentConfig &config) {
    validate_config(config);
    ExperimentReport report{config, {}, std::nullopt, std::nullopt};
    for (double eps : effective_epsilons(config)) {
        auto branches = branches_for(config, eps);
        for (size_t b = 0; b < branches.size(); b++) {
            const Branch &branch = branches[b];
            uint64_t seed = cell_seed(config, eps, b);
            Rng instance_rng(derive_seed(seed, {0}));
            Instance inst = branch.make(instance_rng);
            validate_instance(config, eps, branch, inst);

            auto start = std::chrono::steady_clock::now();
            ExperimentRow q = quantum_row(config, eps, branch, inst, derive_seed(seed, {1}));
            auto mid = std::chrono::steady_clock::now();
            ExperimentRow c = classical_row(config, eps, branch, inst, derive_seed(seed, {2}));
            auto end = std::chrono::steady_clock::now();
            q.elapsed_ms = std::chrono::duration<double, std::milli>(mid - start).count();
            c.elapsed_ms = std::chrono::duration<double, std::milli>(end - mid).count();
            report.rows.push_back(std::move(q));
            report.rows.push_back(std::move(c));
        }
    }
    report.quantum_slope = slope_for(report.rows, "quantum");
    report.classical_slope = slope_for(report.rows, "classical");
    return report;
}
