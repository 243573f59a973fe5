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


#include "booltest/cli.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "booltest/classical_testers.h"
#include "booltest/errors.h"
#include "booltest/experiment.h"
#include "booltest/generators.h"
#include "booltest/quantum_testers.h"
#include "booltest/report_io.h"
#include "booltest/truth_table_io.h"
#include "booltest/walsh.h"
#include "json.hpp"

using namespace booltest;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Used for builtins without an arity when neither --n nor another source fixes one.
constexpr size_t FALLBACK_ARITY = 8;

template <typename T>
std::optional<T> parse_number(std::string_view text) {
    T v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        return std::nullopt;
    }
    return v;
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw IoError("cannot write '" + path + "'");
    }
}

/// Splits "k1=v1,k2=v2" into pairs; every key must be in `keys`, each exactly once.
std::map<std::string, std::string> key_values(std::string_view body, std::initializer_list<const char *> keys,
                                              std::string_view spec) {
    std::map<std::string, std::string> out;
    size_t start = 0;
    while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string_view item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
        size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("generator '" + std::string(spec) + "': expected key=value, got '" + std::string(item) +
                              "'");
        }
        out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (out.size() != keys.size()) {
        throw FormatError("generator '" + std::string(spec) + "': wrong set of keys");
    }
    for (const char *k : keys) {
        if (!out.count(k)) {
            throw FormatError("generator '" + std::string(spec) + "': missing key '" + k + "'");
        }
    }
    return out;
}

size_t arity_value(const std::string &text, std::string_view spec) {
    auto n = parse_number<size_t>(text);
    if (!n) {
        throw FormatError("generator '" + std::string(spec) + "': bad arity '" + text + "'");
    }
    check_arity(*n);
    return *n;
}

BooleanFunction resolve(std::string_view source, std::optional<size_t> default_arity, Rng &rng) {
    if (source.starts_with("rand:")) {
        auto kv = key_values(source.substr(5), {"n"}, source);
        return gen_random(arity_value(kv["n"], source), rng);
    }
    if (source.starts_with("dist:")) {
        std::string_view body = source.substr(5);
        size_t split = body.rfind(",d=");
        if (!body.starts_with("g=") || split == std::string_view::npos) {
            throw FormatError("generator '" + std::string(source) + "': expected dist:g=<src>,d=<int>");
        }
        BooleanFunction g = resolve(body.substr(2, split - 2), default_arity, rng);
        auto d = parse_number<uint64_t>(body.substr(split + 3));
        if (!d) {
            throw FormatError("generator '" + std::string(source) + "': bad distance");
        }
        if (*d > g.size()) {
            throw FormatError("generator '" + std::string(source) + "': distance exceeds 2^n");
        }
        return gen_at_distance(g, *d, rng);
    }
    if (source.starts_with("bias:")) {
        auto kv = key_values(source.substr(5), {"n", "c", "sign"}, source);
        int sign;
        if (kv["sign"] == "+" || kv["sign"] == "+1" || kv["sign"] == "1") {
            sign = 1;
        } else if (kv["sign"] == "-" || kv["sign"] == "-1") {
            sign = -1;
        } else {
            throw FormatError("generator '" + std::string(source) + "': sign must be + or -");
        }
        double c;
        try {
            c = parse_epsilon(kv["c"]);
        } catch (const std::invalid_argument &) {
            throw FormatError("generator '" + std::string(source) + "': bad bias '" + kv["c"] + "'");
        }
        return gen_with_bias(arity_value(kv["n"], source), c, sign, rng);
    }
    if (auto f = builtin_function(source, default_arity)) {
        return *f;
    }
    return parse_truth_table(read_file(std::string(source)));
}

struct Options {
    std::string f;
    std::string g;
    std::string eps;
    std::string mode = "bound";
    std::string algo;
    uint64_t seed = 1;
    uint64_t trials = 1000;
    std::string out;
    std::string format;
    std::optional<size_t> n;
    std::string problem;
    std::string dump_state;
    bool timing = false;
    bool no_promise_check = false;
};

struct Sources {
    BooleanFunction f;
    std::optional<BooleanFunction> g;
};

Sources load_sources(const Options &o, bool two) {
    BooleanFunction f = resolve_source(o.f, o.n.value_or(FALLBACK_ARITY), derive_seed(o.seed, {1}));
    if (!two) {
        return {f, std::nullopt};
    }
    BooleanFunction g = resolve_source(o.g, o.n.value_or(f.arity()), derive_seed(o.seed, {2}));
    if (f.arity() != g.arity()) {
        throw ArityError("f has " + std::to_string(f.arity()) + " variables but g has " +
                         std::to_string(g.arity()));
    }
    return {f, g};
}

void check_promise(const std::string &sub, const Sources &s, double eps) {
    bool ok;
    std::string what;
    if (sub == "identity") {
        double d = dist(s.f, *s.g);
        ok = d == 0 || d >= eps;
        what = "Dist(f,g)=" + num(d) + " is neither 0 nor >= eps";
    } else if (sub == "correlation") {
        double c = std::abs(correlation(s.f, *s.g));
        ok = c == 1 || c == eps;
        what = "|C(f,g)|=" + num(c) + " is neither 1 nor eps";
    } else {
        double c = std::abs(bias(s.f));
        ok = c == 0 || c >= eps;
        what = "|C(f)|=" + num(c) + " is neither 0 nor >= eps";
    }
    if (!ok) {
        throw PromiseError(what + " (eps=" + num(eps) + "; pass --no-promise-check to run anyway)");
    }
}

std::string verdict_text(const Verdict &v) {
    std::ostringstream out;
    out << "decision " << decision_name(v.decision) << "\n";
    if (v.measured_z) {
        out << "measured_z " << *v.measured_z << "\n";
    }
    for (const auto &[d, p] : v.decision_probabilities) {
        out << "p_" << decision_name(d) << " " << num(p) << "\n";
    }
    if (v.plan) {
        out << "iterations " << v.plan->iterations << "\n";
    }
    if (v.estimate) {
        out << "estimate " << num(*v.estimate) << "\n";
    }
    out << "quantum_queries " << v.quantum_queries << "\n";
    out << "classical_queries " << v.classical_queries << "\n";
    out << "seed " << v.seed << "\n";
    if (v.plan) {
        for (const auto &w : v.plan->warnings) {
            out << "warning " << w << "\n";
        }
    }
    return out.str();
}

/// Writes `text` to --out if given (echoing a short summary to stdout), else to stdout.
void emit(const Options &o, const std::string &text, const std::string &summary, std::ostream &out) {
    if (o.out.empty()) {
        out << text;
    } else {
        write_file(o.out, text);
        out << summary;
    }
}

void run_tester(const std::string &sub, const Options &o, std::ostream &out) {
    if (o.format == "csv") {
        throw std::invalid_argument("--format csv applies to bench and walsh only");
    }
    double eps = parse_epsilon(o.eps);
    bool two = sub != "balance";
    Sources s = load_sources(o, two);
    if (!o.no_promise_check) {
        check_promise(sub, s, eps);
    }
    PlanMode mode = *parse_mode(o.mode);
    std::string algo = o.algo.empty() ? "quantum" : o.algo;

    OracleHandle f(s.f);
    std::optional<OracleHandle> g;
    if (two) {
        g.emplace(*s.g);
    }
    Verdict v;
    QuantumRunOptions qopts{};
    if (algo == "quantum") {
        if (sub == "identity") {
            v = test_identity(f, *g, eps, mode, o.seed, qopts);
        } else if (sub == "correlation") {
            v = test_correlation_exact(f, *g, eps, o.seed, qopts);
        } else {
            v = test_balance(f, eps, mode, o.seed, qopts);
        }
    } else if (sub == "identity" && algo == "classical") {
        v = classical_identity(f, *g, eps, o.seed);
    } else if (sub == "balance" && algo == "classical") {
        v = classical_balance(f, eps, o.seed);
    } else if (sub == "correlation" && algo == "deterministic") {
        v = deterministic_correlation(f, *g, eps);
    } else {
        throw std::invalid_argument("--algo " + algo + " is not available for " + sub);
    }

    if (!o.dump_state.empty()) {
        if (!v.plan) {
            throw std::invalid_argument("--dump-state needs a quantum run");
        }
        OracleHandle f2(s.f);
        std::optional<OracleHandle> g2;
        std::vector<std::reference_wrapper<OracleHandle>> oracles{f2};
        if (two) {
            oracles.push_back(g2.emplace(*s.g));
        }
        write_file(o.dump_state, amplified_state(StatePreparation(oracles), *v.plan).dump());
    }

    std::string summary = verdict_text(v);
    emit(o, o.format == "json" ? verdict_to_json(v) : summary, summary, out);
}

void run_walsh(const Options &o, std::ostream &out) {
    BooleanFunction f = load_sources(o, false).f;
    WalshSpectrum w = walsh_spectrum_fast(f);
    std::ostringstream text;
    if (o.format == "json") {
        nlohmann::json j = {{"arity", f.arity()}, {"coefficients", w.coefficients()}};
        text << j.dump(2) << "\n";
    } else {
        if (o.format == "csv") {
            text << "omega,coefficient\n";
        }
        const char *sep = o.format == "csv" ? "," : " ";
        for (uint64_t k = 0; k < f.size(); k++) {
            text << k << sep << num(w[k]) << "\n";
        }
    }
    emit(o, text.str(), "wrote " + std::to_string(f.size()) + " coefficients to " + o.out + "\n", out);
}

void run_gen(const Options &o, std::ostream &out) {
    BooleanFunction f = load_sources(o, false).f;
    emit(o, format_truth_table(f), "wrote " + std::to_string(f.arity()) + "-variable table to " + o.out + "\n", out);
}

void run_bench(const Options &o, std::ostream &out) {
    ExperimentConfig config{};
    config.problem = *parse_problem(o.problem);
    config.n = o.n.value_or(12);
    config.epsilons = o.eps.empty() ? default_epsilons() : parse_epsilon_list(o.eps);
    if (config.problem == Problem::dj) {
        config.epsilons = {0.0};
    }
    config.trials = o.trials;
    config.base_seed = o.seed;
    config.mode = *parse_mode(o.mode);
    ExperimentReport report = run_experiment(config);
    std::string text;
    if (o.format == "json") {
        text = report_to_json(report, o.timing);
    } else if (o.format == "text") {
        text = report_to_text(report, o.timing);
    } else {
        text = report_to_csv(report, o.timing);
    }
    emit(o, text, "wrote " + std::to_string(report.rows.size()) + " rows to " + o.out + "\n", out);
}

std::string one_line(std::string s) {
    for (char &c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

}  // namespace

double booltest::parse_epsilon(const std::string &text) {
    if (size_t slash = text.find('/'); slash != std::string::npos) {
        auto p = parse_number<uint64_t>(std::string_view(text).substr(0, slash));
        auto q = parse_number<uint64_t>(std::string_view(text).substr(slash + 1));
        if (!p || !q || *q == 0) {
            throw std::invalid_argument("bad fraction '" + text + "'");
        }
        return double(*p) / double(*q);
    }
    auto v = parse_number<double>(text);
    if (!v || !std::isfinite(*v)) {
        throw std::invalid_argument("bad number '" + text + "'");
    }
    return *v;
}

std::vector<double> booltest::parse_epsilon_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(parse_epsilon(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty epsilon list");
    }
    return out;
}

BooleanFunction booltest::resolve_source(const std::string &source, std::optional<size_t> default_arity,
                                         uint64_t seed) {
    Rng rng(seed);
    return resolve(source, default_arity, rng);
}

int booltest::run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum and classical property testers for Boolean functions", "booltest"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
        sub->add_option("--out", o.out, "write the result to this file");
        sub->add_option("--n", o.n, "arity for builtins given without one");
    };
    auto tester = [&](const char *name, const char *help, bool two, std::vector<std::string> algos) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--f", o.f, "function source")->required();
        if (two) {
            sub->add_option("--g", o.g, "second function source")->required();
        }
        sub->add_option("--eps", o.eps, "epsilon, decimal or p/q")->required();
        sub->add_option("--mode", o.mode, "iteration-count mode")->check(CLI::IsMember({"bound", "oracle"}));
        sub->add_option("--algo", o.algo, "tester to run")->check(CLI::IsMember(algos));
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--dump-state", o.dump_state, "write final amplitudes as 'index real imag' lines");
        sub->add_flag("--no-promise-check", o.no_promise_check, "run even if the inputs violate the promise");
        common(sub);
    };
    tester("identity", "test f == g against Dist(f,g) >= eps", true, {"quantum", "classical"});
    tester("correlation", "decide |C(f,g)| = 1 against |C(f,g)| = eps", true, {"quantum", "deterministic"});
    tester("balance", "test C(f) = 0 against |C(f)| >= eps", false, {"quantum", "classical"});

    CLI::App *walsh = app.add_subcommand("walsh", "print the Walsh spectrum of f");
    walsh->add_option("--f", o.f, "function source")->required();
    walsh->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    common(walsh);

    CLI::App *gen = app.add_subcommand("gen", "print the truth table of a function source");
    gen->add_option("--f", o.f, "function source")->required();
    common(gen);

    CLI::App *bench = app.add_subcommand("bench", "run an epsilon sweep and report success and query counts");
    bench->add_option("--problem", o.problem, "problem")
        ->required()
        ->check(CLI::IsMember({"identity", "correlation", "balance", "dj"}));
    bench->add_option("--eps", o.eps, "comma-separated epsilons (default 1/8,...,1/128)");
    bench->add_option("--trials", o.trials, "classical Monte Carlo trials")->capture_default_str();
    bench->add_option("--mode", o.mode, "iteration-count mode")->check(CLI::IsMember({"bound", "oracle"}));
    bench->add_option("--format", o.format, "output format (default csv)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    bench->add_flag("--timing", o.timing, "include wall-clock times");
    common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return EXIT_OK;
        }
        err << "error[usage]: " << one_line(e.what()) << "\n";
        return EXIT_USAGE;
    }

    try {
        std::string name = app.get_subcommands().front()->get_name();
        if (name == "walsh") {
            run_walsh(o, out);
        } else if (name == "gen") {
            run_gen(o, out);
        } else if (name == "bench") {
            run_bench(o, out);
        } else {
            run_tester(name, o, out);
        }
    } catch (const IoError &e) {
        err << "error[io]: " << one_line(e.what()) << "\n";
        return EXIT_USAGE;
    } catch (const FormatError &e) {
        err << "error[format]: " << one_line(e.what()) << "\n";
        return EXIT_USAGE;
    } catch (const ArityError &e) {
        err << "error[arity]: " << one_line(e.what()) << "\n";
        return EXIT_USAGE;
    } catch (const RepresentabilityError &e) {
        err << "error[representability]: " << one_line(e.what()) << " (nearest " << num(e.nearest_below) << ", "
            << num(e.nearest_above) << ")\n";
        return EXIT_PROMISE;
    } catch (const PromiseError &e) {
        err << "error[promise]: " << one_line(e.what()) << "\n";
        return EXIT_PROMISE;
    } catch (const std::invalid_argument &e) {
        err << "error[usage]: " << one_line(e.what()) << "\n";
        return EXIT_USAGE;
    } catch (const std::out_of_range &e) {
        err << "error[usage]: " << one_line(e.what()) << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        err << "error[internal]: " << one_line(e.what()) << "\n";
        return EXIT_INTERNAL;
    }
    return EXIT_OK;
}
