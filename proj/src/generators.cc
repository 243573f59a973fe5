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

#include "booltest/generators.h"

#include <algorithm>
#include <cmath>
#include <ranges>
#include <sstream>
#include <stdexcept>

#include "booltest/errors.h"

using namespace booltest;

static std::vector<uint64_t> sample_indices(uint64_t population, uint64_t count, Rng &rng) {
    std::vector<uint64_t> out(count);
    auto end = std::ranges::sample(std::views::iota(uint64_t{0}, population), out.begin(), count, rng);
    out.erase(end, out.end());
    return out;
}

BooleanFunction booltest::gen_random(size_t arity, Rng &rng) {
    check_arity(arity);
    uint64_t n = uint64_t{1} << arity;
    std::vector<uint64_t> words((n + 63) / 64);
    for (auto &w : words) {
        w = rng();
    }
    return BooleanFunction::from_words(std::move(words), arity);
}

BooleanFunction booltest::gen_at_distance(const BooleanFunction &g, uint64_t distance, Rng &rng) {
    if (distance > g.size()) {
        throw std::out_of_range(
            "distance " + std::to_string(distance) + " exceeds table size " + std::to_string(g.size()));
    }
    auto flips = sample_indices(g.size(), distance, rng);
    return g.with_flipped(flips);
}

std::optional<uint64_t> booltest::weight_for_bias(size_t arity, double c, int sign) {
    check_arity(arity);
    if (!(c >= 0 && c <= 1) || (sign != 1 && sign != -1)) {
        return std::nullopt;
    }
    double n = std::ldexp(1.0, int(arity));
    double w = (1.0 - sign * c) * n / 2;
    double rounded = std::round(w);
    if (rounded < 0 || rounded > n) {
        return std::nullopt;
    }
    // Rounding in (1 - sign*c) can hide a non-dyadic c; the reconstructed bias is exact.
    double reconstructed = (n - 2 * rounded) / n;
    if (reconstructed != sign * c) {
        return std::nullopt;
    }
    return uint64_t(rounded);
}

BooleanFunction booltest::gen_with_weight(size_t arity, uint64_t weight, Rng &rng) {
    return gen_at_distance(BooleanFunction::constant(arity, false), weight, rng);
}

BooleanFunction booltest::gen_with_bias(size_t arity, double c, int sign, Rng &rng) {
    if (!(c >= 0 && c <= 1)) {
        throw std::out_of_range("bias magnitude must lie in [0, 1]");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    auto w = weight_for_bias(arity, c, sign);
    if (!w) {
        double half = std::ldexp(1.0, int(arity) - 1);
        double step = 1.0 / half;
        double lower = std::floor(c / step) * step;
        double upper = std::min(1.0, lower + step);
        std::ostringstream msg;
        msg.precision(17);
        msg << "bias " << c << " is not representable with " << arity << " variables; nearest representable: "
            << lower << " and " << upper;
        throw RepresentabilityError(msg.str(), lower, upper);
    }
    return gen_with_weight(arity, *w, rng);
}
