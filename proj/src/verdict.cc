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

#include "booltest/verdict.h"

#include <array>
#include <stdexcept>

using namespace booltest;

static constexpr std::array<std::pair<Decision, const char *>, 7> DECISION_NAMES = {{
    {Decision::identical, "identical"},
    {Decision::eps_far, "eps_far"},
    {Decision::corr_one, "corr_one"},
    {Decision::corr_eps, "corr_eps"},
    {Decision::balanced, "balanced"},
    {Decision::eps_far_balanced, "eps_far_balanced"},
    {Decision::promise_violation, "promise_violation"},
}};

const char *booltest::decision_name(Decision d) {
    for (const auto &[k, v] : DECISION_NAMES) {
        if (k == d) {
            return v;
        }
    }
    return "unknown";
}

std::optional<Decision> booltest::parse_decision(const std::string &text) {
    for (const auto &[k, v] : DECISION_NAMES) {
        if (text == v) {
            return k;
        }
    }
    return std::nullopt;
}

double Verdict::probability(Decision d) const {
    if (decision_probabilities.empty()) {
        throw std::logic_error("verdict carries no exact outcome probabilities");
    }
    for (const auto &[k, p] : decision_probabilities) {
        if (k == d) {
            return p;
        }
    }
    return 0.0;
}
