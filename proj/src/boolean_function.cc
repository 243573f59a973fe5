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

#include "booltest/boolean_function.h"

#include <bit>
#include <stdexcept>

#include "booltest/errors.h"

using namespace booltest;

static size_t num_words(size_t arity) {
    return ((uint64_t{1} << arity) + 63) / 64;
}

void booltest::check_arity(size_t arity, size_t max_arity) {
    if (arity < 1 || arity > max_arity) {
        throw std::out_of_range(
            "arity " + std::to_string(arity) + " outside supported range [1, " + std::to_string(max_arity) + "]");
    }
}

void booltest::require_same_arity(const BooleanFunction &f, const BooleanFunction &g) {
    if (f.arity() != g.arity()) {
        throw ArityError(
            "arity mismatch: " + std::to_string(f.arity()) + " vs " + std::to_string(g.arity()));
    }
}

BooleanFunction::BooleanFunction(size_t arity, std::vector<uint64_t> words) : arity_(arity), words_(std::move(words)) {
    clear_padding();
}

void BooleanFunction::clear_padding() {
    if (arity_ < 6) {
        words_[0] &= (uint64_t{1} << (uint64_t{1} << arity_)) - 1;
    }
}

BooleanFunction BooleanFunction::from_truth_table(std::span<const uint8_t> bits, size_t arity) {
    check_arity(arity);
    if (bits.size() != (uint64_t{1} << arity)) {
        throw FormatError(
            "truth table has " + std::to_string(bits.size()) + " entries, expected 2^" + std::to_string(arity));
    }
    std::vector<uint64_t> words(num_words(arity), 0);
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] > 1) {
            throw FormatError("truth table entries must be 0 or 1");
        }
        words[i >> 6] |= uint64_t{bits[i]} << (i & 63);
    }
    return BooleanFunction(arity, std::move(words));
}

BooleanFunction BooleanFunction::from_truth_table(const std::vector<bool> &bits, size_t arity) {
    std::vector<uint8_t> raw(bits.begin(), bits.end());
    return from_truth_table(std::span<const uint8_t>(raw), arity);
}

BooleanFunction BooleanFunction::from_words(std::vector<uint64_t> words, size_t arity) {
    check_arity(arity);
    if (words.size() != num_words(arity)) {
        throw FormatError("word count does not match arity");
    }
    return BooleanFunction(arity, std::move(words));
}

BooleanFunction BooleanFunction::constant(size_t arity, bool value) {
    check_arity(arity);
    return BooleanFunction(arity, std::vector<uint64_t>(num_words(arity), value ? ~uint64_t{0} : 0));
}

BooleanFunction BooleanFunction::parity(size_t arity) {
    check_arity(arity);
    std::vector<uint64_t> words(num_words(arity), 0);
    for (uint64_t i = 0; i < (uint64_t{1} << arity); i++) {
        words[i >> 6] |= uint64_t(std::popcount(i) & 1) << (i & 63);
    }
    return BooleanFunction(arity, std::move(words));
}

BooleanFunction BooleanFunction::conjunction(size_t arity) {
    check_arity(arity);
    std::vector<uint64_t> words(num_words(arity), 0);
    uint64_t last = (uint64_t{1} << arity) - 1;
    words[last >> 6] |= uint64_t{1} << (last & 63);
    return BooleanFunction(arity, std::move(words));
}

BooleanFunction BooleanFunction::majority(size_t arity) {
    check_arity(arity);
    if (arity % 2 == 0) {
        throw std::invalid_argument("majority requires an odd number of variables");
    }
    std::vector<uint64_t> words(num_words(arity), 0);
    for (uint64_t i = 0; i < (uint64_t{1} << arity); i++) {
        words[i >> 6] |= uint64_t(size_t(std::popcount(i)) > arity / 2) << (i & 63);
    }
    return BooleanFunction(arity, std::move(words));
}

uint64_t BooleanFunction::weight() const {
    uint64_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

BooleanFunction BooleanFunction::with_flipped(std::span<const uint64_t> indices) const {
    std::vector<uint64_t> words = words_;
    for (uint64_t i : indices) {
        if (i >= size()) {
            throw std::out_of_range("flip index out of range");
        }
        words[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    return BooleanFunction(arity_, std::move(words));
}

BooleanFunction BooleanFunction::complement() const {
    std::vector<uint64_t> words = words_;
    for (auto &w : words) {
        w = ~w;
    }
    return BooleanFunction(arity_, std::move(words));
}

uint64_t booltest::hamming_distance(const BooleanFunction &f, const BooleanFunction &g) {
    require_same_arity(f, g);
    uint64_t total = 0;
    for (size_t k = 0; k < f.words().size(); k++) {
        total += std::popcount(f.words()[k] ^ g.words()[k]);
    }
    return total;
}

double booltest::dist(const BooleanFunction &f, const BooleanFunction &g) {
    return double(hamming_distance(f, g)) / double(f.size());
}

BooleanFunction booltest::xor_functions(const BooleanFunction &f, const BooleanFunction &g) {
    require_same_arity(f, g);
    std::vector<uint64_t> words(f.words().size());
    for (size_t k = 0; k < words.size(); k++) {
        words[k] = f.words()[k] ^ g.words()[k];
    }
    return BooleanFunction::from_words(std::move(words), f.arity());
}

double booltest::correlation(const BooleanFunction &f, const BooleanFunction &g) {
    uint64_t ham = hamming_distance(f, g);
    return double(int64_t(f.size()) - 2 * int64_t(ham)) / double(f.size());
}

double booltest::bias(const BooleanFunction &f) {
    return double(int64_t(f.size()) - 2 * int64_t(f.weight())) / double(f.size());
}
