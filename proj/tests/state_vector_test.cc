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

#include <gtest/gtest.h>

#include <numbers>

#include "booltest/errors.h"
#include "booltest/generators.h"
#include "booltest/walsh.h"

using namespace booltest;

TEST(state_vector, starts_at_zero) {
    StateVector s(3);
    EXPECT_EQ(s.size(), 8u);
    EXPECT_EQ(s[0], Amplitude(1));
    for (uint64_t z = 1; z < 8; z++) {
        EXPECT_EQ(s[z], Amplitude(0));
    }
    EXPECT_THROW(StateVector(17), std::out_of_range);
}

TEST(state_vector, hadamard_is_uniform_and_involutive) {
    for (size_t n = 1; n <= 9; n++) {
        StateVector s(n);
        s.apply_hadamard_all();
        double amp = std::pow(2.0, -double(n) / 2);
        for (uint64_t z = 0; z < s.size(); z++) {
            EXPECT_NEAR(s[z].real(), amp, 1e-15);
        }
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
        s.apply_hadamard_all();
        EXPECT_NEAR(s[0].real(), 1.0, 1e-14);
    }
}

TEST(state_vector, h_sign_h_is_walsh_spectrum) {
    Rng rng(3);
    for (size_t n = 1; n <= 10; n++) {
        auto f = gen_random(n, rng);
        StateVector s(n);
        s.apply_hadamard_all();
        s.apply_sign(f);
        s.apply_hadamard_all();
        auto w = walsh_spectrum_naive(f);
        for (uint64_t z = 0; z < s.size(); z++) {
            EXPECT_NEAR(s[z].real(), w[z], 1e-12);
            EXPECT_NEAR(s[z].imag(), 0.0, 1e-12);
        }
    }
}

TEST(state_vector, sign_oracles) {
    Rng rng(4);
    StateVector s(4);
    s.apply_hadamard_all();
    s.apply_zero_phase(0.3);
    StateVector before = s;
    s.apply_sign(BooleanFunction::constant(4, false));
    EXPECT_EQ(s.probabilities(), before.probabilities());
    s.apply_sign(BooleanFunction::constant(4, true));
    for (uint64_t z = 0; z < 16; z++) {
        EXPECT_EQ(s[z], -before[z]);
    }
    auto f = gen_random(4, rng);
    s = before;
    s.apply_sign(f);
    s.apply_sign(f);
    for (uint64_t z = 0; z < 16; z++) {
        EXPECT_NEAR(std::abs(s[z] - before[z]), 0, 1e-15);
    }
    EXPECT_THROW(s.apply_sign(BooleanFunction::parity(3)), ArityError);
}

TEST(state_vector, unit_phase_exact_at_quarter_turns) {
    EXPECT_EQ(unit_phase(0), Amplitude(1, 0));
    EXPECT_EQ(unit_phase(std::numbers::pi), Amplitude(-1, 0));
    EXPECT_EQ(unit_phase(std::numbers::pi / 2), Amplitude(0, 1));
    EXPECT_EQ(unit_phase(-std::numbers::pi / 2), Amplitude(0, -1));
    EXPECT_NEAR(std::abs(unit_phase(2 * std::numbers::pi) - Amplitude(1)), 0, 1e-15);
    EXPECT_NEAR(std::arg(unit_phase(1.0)), 1.0, 1e-15);
}

TEST(state_vector, sample_follows_distribution) {
    std::vector<Amplitude> amps{std::sqrt(0.25), 0, std::sqrt(0.75), 0};
    auto s = StateVector::from_amplitudes(2, amps);
    Rng rng(5);
    int twos = 0;
    for (int t = 0; t < 4000; t++) {
        uint64_t z = s.sample(rng);
        ASSERT_TRUE(z == 0 || z == 2);
        twos += z == 2;
    }
    EXPECT_NEAR(twos / 4000.0, 0.75, 0.03);
    EXPECT_THROW(StateVector::from_amplitudes(2, {1, 0, 0}), std::invalid_argument);
}

TEST(state_vector, dump_format) {
    StateVector s(1);
    s.apply_hadamard_all();
    s.apply_zero_phase(std::numbers::pi / 2);
    EXPECT_EQ(s.dump(), "0 0 0.70710678118654757\n1 0.70710678118654757 0\n");
}
