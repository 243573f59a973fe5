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

#include "booltest/walsh.h"

#include <bit>
#include <stdexcept>

using namespace booltest;

WalshSpectrum::WalshSpectrum(size_t arity, std::vector<int32_t> sums) : arity_(arity), sums_(std::move(sums)) {
    if (sums_.size() != (uint64_t{1} << arity_)) {
        throw std::invalid_argument("spectrum length must be 2^arity");
    }
}

std::vector<double> WalshSpectrum::coefficients() const {
    std::vector<double> out(sums_.size());
    for (uint64_t w = 0; w < sums_.size(); w++) {
        out[w] = (*this)[w];
    }
    return out;
}

WalshSpectrum booltest::walsh_spectrum_naive(const BooleanFunction &f) {
    check_arity(f.arity(), MAX_NAIVE_WALSH_ARITY);
    uint64_t n = f.size();
    std::vector<int32_t> sums(n);
    for (uint64_t w = 0; w < n; w++) {
        int64_t s = 0;
        for (uint64_t x = 0; x < n; x++) {
            bool exponent = f(x) ^ (std::popcount(w & x) & 1);
            s += exponent ? -1 : 1;
        }
        sums[w] = int32_t(s);
    }
    return WalshSpectrum(f.arity(), std::move(sums));
}

WalshSpectrum booltest::walsh_spectrum_fast(const BooleanFunction &f) {
    check_arity(f.arity());
    uint64_t n = f.size();
    std::vector<int32_t> v(n);
    for (uint64_t x = 0; x < n; x++) {
        v[x] = f(x) ? -1 : 1;
    }
    for (uint64_t half = 1; half < n; half <<= 1) {
        for (uint64_t block = 0; block < n; block += half << 1) {
            for (uint64_t k = block; k < block + half; k++) {
                int32_t a = v[k];
                int32_t b = v[k + half];
                v[k] = a + b;
                v[k + half] = a - b;
            }
        }
    }
    return WalshSpectrum(f.arity(), std::move(v));
}
