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

#ifndef BOOLTEST_BOOLEAN_FUNCTION_H
#define BOOLTEST_BOOLEAN_FUNCTION_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace booltest {

constexpr size_t MAX_FUNCTION_ARITY = 24;

/// A Boolean function f: {0,1}^n -> {0,1} stored as a bit-packed truth table.
///
/// Index encoding: the bit at index i is f(x) where x = (x_1, ..., x_n) is the
/// big-endian binary expansion of i, i.e. x_1 is the most significant bit.
/// Instances are immutable once constructed.
class BooleanFunction {
   public:
    /// Builds f from one entry per input, in index order.
    /// Throws FormatError on a length mismatch and std::out_of_range on a bad arity.
    static BooleanFunction from_truth_table(std::span<const uint8_t> bits, size_t arity);
    static BooleanFunction from_truth_table(const std::vector<bool> &bits, size_t arity);
    /// Builds f from packed 64-bit words (bit i of the table is bit i%64 of word i/64).
    static BooleanFunction from_words(std::vector<uint64_t> words, size_t arity);

    static BooleanFunction constant(size_t arity, bool value);
    /// x_1 xor ... xor x_n.
    static BooleanFunction parity(size_t arity);
    /// x_1 and ... and x_n.
    static BooleanFunction conjunction(size_t arity);
    /// 1 iff more than half of the inputs are 1. Requires odd arity.
    static BooleanFunction majority(size_t arity);

    size_t arity() const {
        return arity_;
    }
    uint64_t size() const {
        return uint64_t{1} << arity_;
    }
    bool operator()(uint64_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    /// Number of ones in the truth table.
    uint64_t weight() const;
    const std::vector<uint64_t> &words() const {
        return words_;
    }
    /// Copy of this function with the listed indices flipped.
    BooleanFunction with_flipped(std::span<const uint64_t> indices) const;
    BooleanFunction complement() const;

    bool operator==(const BooleanFunction &other) const = default;

   private:
    BooleanFunction(size_t arity, std::vector<uint64_t> words);
    void clear_padding();

    size_t arity_;
    std::vector<uint64_t> words_;
};

/// Checks 1 <= arity <= max_arity and throws std::out_of_range otherwise.
void check_arity(size_t arity, size_t max_arity = MAX_FUNCTION_ARITY);
void require_same_arity(const BooleanFunction &f, const BooleanFunction &g);

/// Ham(f, g): number of inputs where f and g disagree.
uint64_t hamming_distance(const BooleanFunction &f, const BooleanFunction &g);
/// Dist(f, g) = Ham(f, g) / 2^n.
double dist(const BooleanFunction &f, const BooleanFunction &g);
/// h(x) = f(x) xor g(x).
BooleanFunction xor_functions(const BooleanFunction &f, const BooleanFunction &g);
/// C(f, g) = (agreements - disagreements) / 2^n. Exact: every value is a dyadic rational.
double correlation(const BooleanFunction &f, const BooleanFunction &g);
/// C(f) = C(f, 0) = W_f(0).
double bias(const BooleanFunction &f);

}  // namespace booltest

#endif
