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

#include "booltest/amplify.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "booltest/errors.h"

using namespace booltest;

std::string GoodPredicate::name() const {
    switch (kind_) {
        case Kind::nonzero:
            return "nonzero";
        case Kind::zero:
            return "zero";
        default:
            return "table";
    }
}

const char *booltest::mode_name(PlanMode mode) {
    return mode == PlanMode::bound ? "bound" : "oracle";
}

std::optional<PlanMode> booltest::parse_mode(const std::string &text) {
    if (text == "bound") {
        return PlanMode::bound;
    }
    if (text == "oracle") {
        return PlanMode::oracle;
    }
    return std::nullopt;
}

void AmplificationPlan::validate() const {
    auto in_range = [](double phi) {
        return phi > -std::numbers::pi && phi <= std::numbers::pi;
    };
    if (!in_range(phase_s0) || !in_range(phase_schi)) {
        throw std::invalid_argument("plan phases must lie in (-pi, pi]");
    }
    if (!(epsilon >= 0 && epsilon < 1)) {
        throw std::invalid_argument("plan epsilon must lie in [0, 1)");
    }
}

StatePreparation::StatePreparation(std::vector<std::reference_wrapper<OracleHandle>> oracles)
    : oracles_(std::move(oracles)) {
    if (oracles_.empty()) {
        throw std::invalid_argument("state preparation needs at least one oracle");
    }
    arity_ = oracles_.front().get().arity();
    check_arity(arity_, MAX_STATE_ARITY);
    for (const auto &o : oracles_) {
        if (o.get().arity() != arity_) {
            throw ArityError("state preparation oracles have different arities");
        }
    }
}

void StatePreparation::apply(StateVector &state) const {
    if (state.arity() != arity_) {
        throw ArityError("state arity does not match state preparation");
    }
    state.apply_hadamard_all();
    for (auto it = oracles_.begin(); it != oracles_.end(); ++it) {
        it->get().apply_phase(state);
    }
    state.apply_hadamard_all();
}

void StatePreparation::apply_inverse(StateVector &state) const {
    if (state.arity() != arity_) {
        throw ArityError("state arity does not match state preparation");
    }
    state.apply_hadamard_all();
    for (auto it = oracles_.rbegin(); it != oracles_.rend(); ++it) {
        it->get().apply_phase(state);
    }
    state.apply_hadamard_all();
}

StateVector booltest::prepare_A(const StatePreparation &prep) {
    StateVector state(prep.arity());
    prep.apply(state);
    return state;
}

void booltest::apply_phase_oracle(StateVector &state, OracleHandle &oracle) {
    oracle.apply_phase(state);
}

void booltest::apply_S_chi(StateVector &state, const GoodPredicate &good, double phi) {
    Amplitude factor = unit_phase(phi);
    auto amps = state.mutable_amplitudes();
    for (uint64_t z = 0; z < amps.size(); z++) {
        if (good(z)) {
            amps[z] *= factor;
        }
    }
}

void booltest::apply_S_0(StateVector &state, double phi) {
    state.apply_zero_phase(phi);
}

void booltest::apply_Q(StateVector &state, const StatePreparation &prep, const GoodPredicate &good, double phase_s0,
                       double phase_schi) {
    apply_S_chi(state, good, phase_schi);
    prep.apply_inverse(state);
    apply_S_0(state, phase_s0);
    prep.apply(state);
    state.scale(-1.0);
}

void booltest::apply_Q(StateVector &state, const StatePreparation &prep, const AmplificationPlan &plan) {
    apply_Q(state, prep, plan.good, plan.phase_s0, plan.phase_schi);
}

StateVector booltest::amplified_state(const StatePreparation &prep, const AmplificationPlan &plan) {
    StateVector state = prepare_A(prep);
    for (uint64_t j = 0; j < plan.iterations; j++) {
        apply_Q(state, prep, plan);
    }
    return state;
}

double booltest::good_probability(const StateVector &state, const GoodPredicate &good) {
    double total = 0;
    for (uint64_t z = 0; z < state.size(); z++) {
        if (good(z)) {
            total += std::norm(state[z]);
        }
    }
    return total;
}

std::vector<double> booltest::measure_distribution(const StateVector &state) {
    return state.probabilities();
}

uint64_t booltest::sample(const StateVector &state, Rng &rng) {
    return state.sample(rng);
}

uint64_t booltest::iterations_for_probability(double a) {
    if (!(a >= 0 && a <= 1)) {
        throw std::out_of_range("success probability must lie in [0, 1]");
    }
    if (a == 0) {
        return 0;
    }
    double theta = std::asin(std::sqrt(a));
    // Tolerate rounding when pi/(4 theta) is mathematically an integer (e.g. a = 1/2).
    return uint64_t(std::floor(std::numbers::pi / (4 * theta) + 1e-9));
}
