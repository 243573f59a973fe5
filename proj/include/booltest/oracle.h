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

#ifndef BOOLTEST_ORACLE_H
#define BOOLTEST_ORACLE_H

#include <cstdint>

#include "booltest/boolean_function.h"
#include "booltest/state_vector.h"

namespace booltest {

/// Black-box access to a Boolean function with query bookkeeping.
///
/// Every classical point evaluation and every phase-oracle application is
/// counted; counters only go up (until reset_counters).
class OracleHandle {
   public:
    explicit OracleHandle(BooleanFunction f) : function_(std::move(f)) {
    }

    /// One classical query: returns f(x).
    bool query(uint64_t x) {
        classical_queries_++;
        return function_(x);
    }
    /// One quantum query: |x> -> (-1)^f(x) |x>.
    void apply_phase(StateVector &state) {
        state.apply_sign(function_);
        quantum_queries_++;
    }

    uint64_t quantum_queries() const {
        return quantum_queries_;
    }
    uint64_t classical_queries() const {
        return classical_queries_;
    }
    void reset_counters() {
        quantum_queries_ = 0;
        classical_queries_ = 0;
    }

    /// Direct access for instance validation and reporting; not a query.
    const BooleanFunction &function() const {
        return function_;
    }
    size_t arity() const {
        return function_.arity();
    }

   private:
    BooleanFunction function_;
    uint64_t quantum_queries_ = 0;
    uint64_t classical_queries_ = 0;
};

}  // namespace booltest

#endif
