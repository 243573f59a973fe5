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

#ifndef BOOLTEST_ERRORS_H
#define BOOLTEST_ERRORS_H

#include <stdexcept>
#include <string>

namespace booltest {

/// Two functions (or a function and a state) disagree on the number of variables.
struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed truth-table text, builtin name, or generator spec.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A requested bias/distance cannot be realized exactly at the given arity.
///
/// Carries the two nearest representable values so callers can suggest them.
struct RepresentabilityError : std::domain_error {
    RepresentabilityError(const std::string &what, double lower, double upper)
        : std::domain_error(what), nearest_below(lower), nearest_above(upper) {
    }
    double nearest_below;
    double nearest_above;
};

/// An instance does not satisfy the promise of the problem it was handed to.
struct PromiseError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace booltest

#endif
