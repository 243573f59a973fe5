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

#include "booltest/truth_table_io.h"

#include <cctype>
#include <charconv>
#include <vector>

#include "booltest/errors.h"

using namespace booltest;

static constexpr char HEX_DIGITS[] = "0123456789abcdef";

static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace((unsigned char)s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace((unsigned char)s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

static int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    c = char(std::tolower((unsigned char)c));
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    return -1;
}

std::string booltest::format_truth_table(const BooleanFunction &f) {
    uint64_t n = f.size();
    uint64_t digits = (n + 3) / 4;
    std::string out = std::to_string(f.arity()) + "\n";
    out.reserve(out.size() + digits + 1);
    for (uint64_t d = 0; d < digits; d++) {
        int v = 0;
        for (uint64_t b = 0; b < 4; b++) {
            uint64_t i = 4 * d + b;
            v = (v << 1) | (i < n && f(i) ? 1 : 0);
        }
        out.push_back(HEX_DIGITS[v]);
    }
    out.push_back('\n');
    return out;
}

BooleanFunction booltest::parse_truth_table(std::string_view text) {
    size_t newline = text.find('\n');
    if (newline == std::string_view::npos) {
        throw FormatError("truth table: expected two lines (arity, hex table)");
    }
    std::string_view first = trim(text.substr(0, newline));
    std::string_view rest = text.substr(newline + 1);
    size_t second_end = rest.find('\n');
    std::string_view second = trim(rest.substr(0, second_end));
    if (second_end != std::string_view::npos && !trim(rest.substr(second_end)).empty()) {
        throw FormatError("truth table: unexpected content after the hex line");
    }

    size_t arity = 0;
    auto [ptr, ec] = std::from_chars(first.data(), first.data() + first.size(), arity);
    if (ec != std::errc() || ptr != first.data() + first.size()) {
        throw FormatError("truth table: first line must be a decimal arity, got '" + std::string(first) + "'");
    }
    if (arity < 1 || arity > MAX_FUNCTION_ARITY) {
        throw FormatError("truth table: arity " + std::to_string(arity) + " outside [1, " +
                          std::to_string(MAX_FUNCTION_ARITY) + "]");
    }

    uint64_t n = uint64_t{1} << arity;
    uint64_t digits = (n + 3) / 4;
    if (second.size() != digits) {
        throw FormatError(
            "truth table: expected " + std::to_string(digits) + " hex digits for arity " + std::to_string(arity) +
            ", got " + std::to_string(second.size()));
    }
    std::vector<uint64_t> words((n + 63) / 64, 0);
    for (uint64_t d = 0; d < digits; d++) {
        int v = hex_value(second[d]);
        if (v < 0) {
            throw FormatError(std::string("truth table: invalid hex digit '") + second[d] + "'");
        }
        for (uint64_t b = 0; b < 4; b++) {
            uint64_t i = 4 * d + b;
            bool bit = (v >> (3 - b)) & 1;
            if (i >= n) {
                if (bit) {
                    throw FormatError("truth table: pad bits must be zero");
                }
                continue;
            }
            words[i >> 6] |= uint64_t(bit) << (i & 63);
        }
    }
    return BooleanFunction::from_words(std::move(words), arity);
}

std::optional<BooleanFunction> booltest::builtin_function(std::string_view name, std::optional<size_t> default_arity) {
    std::string_view base = name;
    std::string_view suffix;
    if (size_t colon = name.find(':'); colon != std::string_view::npos) {
        base = name.substr(0, colon);
        suffix = name.substr(colon + 1);
        if (suffix.empty()) {
            throw FormatError("builtin: empty arity after ':' in '" + std::string(name) + "'");
        }
    } else if (name != "const0" && name != "const1") {
        size_t split = name.size();
        while (split > 0 && std::isdigit((unsigned char)name[split - 1])) {
            split--;
        }
        base = name.substr(0, split);
        suffix = name.substr(split);
    }
    if (base != "const0" && base != "const1" && base != "parity" && base != "and" && base != "majority") {
        return std::nullopt;
    }
    std::optional<size_t> arity = default_arity;
    if (!suffix.empty()) {
        size_t v = 0;
        auto [ptr, ec] = std::from_chars(suffix.data(), suffix.data() + suffix.size(), v);
        if (ec != std::errc() || ptr != suffix.data() + suffix.size()) {
            throw FormatError("builtin: bad arity suffix in '" + std::string(name) + "'");
        }
        arity = v;
    }
    if (!arity) {
        throw FormatError("builtin '" + std::string(name) + "' needs an arity (suffix like parity8, or --n)");
    }
    if (base == "const0") {
        return BooleanFunction::constant(*arity, false);
    }
    if (base == "const1") {
        return BooleanFunction::constant(*arity, true);
    }
    if (base == "parity") {
        return BooleanFunction::parity(*arity);
    }
    if (base == "and") {
        return BooleanFunction::conjunction(*arity);
    }
    if (*arity % 2 == 0) {
        throw FormatError("builtin majority needs an odd arity");
    }
    return BooleanFunction::majority(*arity);
}
