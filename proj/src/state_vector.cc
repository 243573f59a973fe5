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

#include "booltest/state_vector.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "booltest/errors.h"

using namespace booltest;

Amplitude booltest::unit_phase(double phi) {
    double quarter_turns = phi / (std::numbers::pi / 2);
    double rounded = std::round(quarter_turns);
    if (quarter_turns == rounded) {
        switch (((int64_t(rounded) % 4) + 4) % 4) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
    return std::polar(1.0, phi);
}

StateVector::StateVector(size_t arity) : arity_(arity) {
    check_arity(arity, MAX_STATE_ARITY);
    amps_.assign(uint64_t{1} << arity, Amplitude{0, 0});
    amps_[0] = 1;
}

StateVector::StateVector(size_t arity, std::vector<Amplitude> amps) : arity_(arity), amps_(std::move(amps)) {
}

StateVector StateVector::from_amplitudes(size_t arity, std::vector<Amplitude> amps) {
    check_arity(arity, MAX_STATE_ARITY);
    if (amps.size() != (uint64_t{1} << arity)) {
        throw std::invalid_argument("amplitude count must be 2^arity");
    }
    return StateVector(arity, std::move(amps));
}

void StateVector::apply_hadamard_all() {
    uint64_t n = amps_.size();
    for (uint64_t half = 1; half < n; half <<= 1) {
        for (uint64_t block = 0; block < n; block += half << 1) {
            for (uint64_t k = block; k < block + half; k++) {
                Amplitude a = amps_[k];
                Amplitude b = amps_[k + half];
                amps_[k] = a + b;
                amps_[k + half] = a - b;
            }
        }
    }
    // Exact power of two for even n; one rounding of sqrt(1/2) otherwise.
    double factor = std::ldexp(arity_ % 2 ? std::numbers::sqrt2 / 2 : 1.0, -int(arity_ / 2));
    for (auto &a : amps_) {
        a *= factor;
    }
}

void StateVector::apply_sign(const BooleanFunction &f) {
    if (f.arity() != arity_) {
        throw ArityError("oracle arity " + std::to_string(f.arity()) + " does not match register arity " +
                         std::to_string(arity_));
    }
    for (uint64_t x = 0; x < amps_.size(); x++) {
        if (f(x)) {
            amps_[x] = -amps_[x];
        }
    }
}

void StateVector::apply_zero_phase(double phi) {
    amps_[0] *= unit_phase(phi);
}

void StateVector::scale(Amplitude factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    for (uint64_t z = 0; z < amps_.size(); z++) {
        out[z] = std::norm(amps_[z]);
    }
    return out;
}

uint64_t StateVector::sample(Rng &rng) const {
    double u = std::uniform_real_distribution<double>(0.0, norm_squared())(rng);
    double acc = 0;
    uint64_t last_nonzero = 0;
    for (uint64_t z = 0; z < amps_.size(); z++) {
        double p = std::norm(amps_[z]);
        if (p == 0) {
            continue;
        }
        last_nonzero = z;
        acc += p;
        if (u < acc) {
            return z;
        }
    }
    return last_nonzero;
}

std::string StateVector::dump() const {
    std::string out;
    char buf[96];
    for (uint64_t z = 0; z < amps_.size(); z++) {
        std::snprintf(buf, sizeof(buf), "%llu %.17g %.17g\n", (unsigned long long)z, amps_[z].real(), amps_[z].imag());
        out += buf;
    }
    return out;
}
