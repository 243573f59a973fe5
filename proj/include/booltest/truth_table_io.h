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

#ifndef BOOLTEST_TRUTH_TABLE_IO_H
#define BOOLTEST_TRUTH_TABLE_IO_H

#include <optional>
#include <string>
#include <string_view>

#include "booltest/boolean_function.h"

namespace booltest {

/// Text format:
///
///     <n>
///     <hex digits>
///
/// The hex string holds ceil(2^n / 4) digits. Reading digits left to right and the
/// bits of each digit from most to least significant yields f(0), f(1), ...,
/// f(2^n - 1). Pad bits after the last entry (only when n = 1) must be zero.
std::string format_truth_table(const BooleanFunction &f);
BooleanFunction parse_truth_table(std::string_view text);

/// Named functions: const0, const1, parity, and, majority. The arity is given as
/// "name:<n>" (e.g. "const0:8"), as a trailing number for names that do not end in
/// a digit (e.g. "parity8", "and2"), or falls back to `default_arity`.
/// Returns nullopt when `name` is not a builtin.
std::optional<BooleanFunction> builtin_function(std::string_view name, std::optional<size_t> default_arity);

}  // namespace booltest

#endif
