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

#ifndef BOOLTEST_STATE_VECTOR_H
#define BOOLTEST_STATE_VECTOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "booltest/boolean_function.h"
#include "booltest/rng.h"

namespace booltest {

constexpr size_t MAX_STATE_ARITY = 16;

using Amplitude = std::complex<double>;

/// e^{i phi}, exact at multiples of pi/2 so that sign-flip operators stay real.
Amplitude unit_phase(double phi);

/// Amplitudes of the n-qubit working register.
///
/// The |-> ancilla that the phase-kickback construction needs is never stored:
/// U_f |x>|-> = (-1)^f(x) |x>|->, so the register stays a product and every oracle
/// acts as a diagonal sign on these 2^n amplitudes. Basis index z uses the same
/// big-endian encoding as BooleanFunction.
class StateVector {
   public:
    /// The all-zero basis state |0...0>.
    explicit StateVector(size_t arity);
    static StateVector from_amplitudes(size_t arity, std::vector<Amplitude> amps);

    size_t arity() const {
        return arity_;
    }
    uint64_t size() const {
        return amps_.size();
    }
    const Amplitude &operator[](uint64_t z) const {
        return amps_[z];
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    std::span<Amplitude> mutable_amplitudes() {
        return amps_;
    }

    /// H on every qubit: butterflies followed by a single 2^(-n/2) rescale.
    void apply_hadamard_all();
    /// amps[x] *= (-1)^f(x). No query accounting; see OracleHandle for that.
    void apply_sign(const BooleanFunction &f);
    /// amps[0] *= e^{i phi}.
    void apply_zero_phase(double phi);
    void scale(Amplitude factor);

    double norm_squared() const;
    /// |amps[z]|^2 for every z.
    std::vector<double> probabilities() const;
    /// Draws a basis index from the outcome distribution.
    uint64_t sample(Rng &rng) const;

    /// One "index real imag" line per amplitude, 17 significant digits.
    std::string dump() const;

   private:
    StateVector(size_t arity, std::vector<Amplitude> amps);

    size_t arity_;
    std::vector<Amplitude> amps_;
};

}  // namespace booltest

#endif
