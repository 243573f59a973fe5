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

#ifndef BOOLTEST_GENERATORS_H
#define BOOLTEST_GENERATORS_H

#include <cstdint>
#include <optional>

#include "booltest/boolean_function.h"
#include "booltest/rng.h"

namespace booltest {

/// Uniformly random truth table.
BooleanFunction gen_random(size_t arity, Rng &rng);

/// Flips exactly `distance` positions of g, chosen uniformly without replacement.
BooleanFunction gen_at_distance(const BooleanFunction &g, uint64_t distance, Rng &rng);

/// Number of ones a function of the given arity needs for C(f) = sign * c,
/// or nullopt when (1 - sign*c) * 2^(n-1) is not an integer.
std::optional<uint64_t> weight_for_bias(size_t arity, double c, int sign);

/// Random f with exactly the weight that makes C(f) = sign * c.
/// Throws RepresentabilityError (carrying the nearest representable biases) when c
/// cannot be hit exactly at this arity.
BooleanFunction gen_with_bias(size_t arity, double c, int sign, Rng &rng);

/// Random f with exactly `weight` ones.
BooleanFunction gen_with_weight(size_t arity, uint64_t weight, Rng &rng);

}  // namespace booltest

#endif
