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

#ifndef BOOLTEST_WALSH_H
#define BOOLTEST_WALSH_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "booltest/boolean_function.h"

namespace booltest {

constexpr size_t MAX_NAIVE_WALSH_ARITY = 16;

/// Walsh coefficients W_f(w) = 2^-n * sum_x (-1)^(f(x) + w.x).
///
/// Stored as the integer character sums; coefficient(w) divides by 2^n at the
/// end so every coefficient is an exact dyadic rational.
class WalshSpectrum {
   public:
    WalshSpectrum(size_t arity, std::vector<int32_t> sums);

    size_t arity() const {
        return arity_;
    }
    uint64_t size() const {
        return sums_.size();
    }
    /// Unnormalized sum_x (-1)^(f(x) + w.x); lies in [-2^n, 2^n] with the parity of 2^n.
    int32_t sum(uint64_t omega) const {
        return sums_[omega];
    }
    double operator[](uint64_t omega) const {
        return double(sums_[omega]) / double(sums_.size());
    }
    std::vector<double> coefficients() const;
    const std::vector<int32_t> &sums() const {
        return sums_;
    }

    bool operator==(const WalshSpectrum &other) const = default;

   private:
    size_t arity_;
    std::vector<int32_t> sums_;
};

/// Direct double sum over (x, w). Quadratic time; the cross-check oracle.
WalshSpectrum walsh_spectrum_naive(const BooleanFunction &f);
/// In-place fast Walsh-Hadamard butterflies over the +-1 table. O(N log N).
WalshSpectrum walsh_spectrum_fast(const BooleanFunction &f);

}  // namespace booltest

#endif
