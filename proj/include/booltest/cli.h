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


#ifndef BOOLTEST_CLI_H
#define BOOLTEST_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "booltest/boolean_function.h"

namespace booltest {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
    EXIT_OK = 0,
    EXIT_INTERNAL = 1,
    EXIT_USAGE = 2,
    EXIT_PROMISE = 3,
};

/// Parses "0.0625" or "1/16". Throws std::invalid_argument on anything else.
double parse_epsilon(const std::string &text);

/// Comma-separated list of parse_epsilon values.
std::vector<double> parse_epsilon_list(const std::string &text);

/// Resolves a function source: a generator spec (rand:, dist:, bias:), a builtin
/// name, or a truth-table file path. `default_arity` applies to builtins without an
/// explicit arity. Generators draw from an RNG seeded with `seed`.
BooleanFunction resolve_source(const std::string &source, std::optional<size_t> default_arity, uint64_t seed);

/// Runs the tool. Normal output goes to `out`; errors are a single
/// "error[<kind>]: <message>" line on `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace booltest

#endif
