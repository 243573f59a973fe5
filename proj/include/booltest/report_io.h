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


#ifndef BOOLTEST_REPORT_IO_H
#define BOOLTEST_REPORT_IO_H

#include <string>

#include "booltest/experiment.h"
#include "booltest/verdict.h"

namespace booltest {

inline constexpr const char *REPORT_SCHEMA = "booltest.report/1";
inline constexpr const char *VERDICT_SCHEMA = "booltest.verdict/1";

/// One line per (eps, branch) with the quantum and classical results side by side.
/// Elapsed times are appended as two extra columns only when `with_timing` is set.
std::string report_to_csv(const ExperimentReport &report, bool with_timing = false);

std::string report_to_json(const ExperimentReport &report, bool with_timing = false);
/// Inverse of report_to_json. Throws FormatError on schema mismatch or missing fields.
ExperimentReport report_from_json(const std::string &text);

/// Human-readable table.
std::string report_to_text(const ExperimentReport &report, bool with_timing = false);

std::string verdict_to_json(const Verdict &verdict);
Verdict verdict_from_json(const std::string &text);

}  // namespace booltest

#endif
