// Copyright 2026 The apsolve Authors
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

#include "apsolve/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "apsolve/ap_solver.hpp"
#include "apsolve/converse_analysis.hpp"
#include "apsolve/equivalence_demos.hpp"
#include "apsolve/error.hpp"
#include "apsolve/exact_linalg.hpp"
#include "apsolve/json_output.hpp"
#include "apsolve/set_sources.hpp"

namespace apsolve {

namespace {

using json::Json;

struct Options {
    std::string matrix;
    std::string source = "primes";
    std::int64_t bound = 1000;
    std::int64_t k = 3;
    std::int64_t k_max = 5;
    std::int64_t n = 3;
    std::int64_t count = 10;
    std::string after;
    std::string sizing;
    int digits = 30;
    bool as_json = false;
};

IntegerMatrix load_matrix(const std::string& spec) {
    if (spec.empty()) throw Error(ErrorKind::invalid_argument, "missing matrix (-m)");
    if (spec.front() == '[') return parse_matrix_literal(spec);
    std::ifstream in(spec);
    if (!in) throw Error(ErrorKind::invalid_argument, "cannot open matrix file: " + spec);
    return parse_matrix(in);
}

std::int64_t parse_count(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::invalid_argument, "bad " + what + ": '" + text + "'");
}

// `primes`, `naturals`, `multiples:M`, `file:PATH`, `list:a,b,c`.
SourcePtr make_source(const std::string& spec, std::int64_t bound) {
    if (bound < 0) throw Error(ErrorKind::invalid_argument, "bound must be non-negative");
    if (spec == "primes") {
        const std::int64_t sieve = std::max<std::int64_t>(bound, 2);
        if (const char* dir = std::getenv("APSOLVE_SOURCE_CACHE"); dir && *dir)
            return PrimeSource::cached(sieve, dir, BeyondBound::extend);
        return primes_source(sieve, BeyondBound::extend);
    }
    if (spec == "naturals") return naturals_source(bound);
    if (spec.starts_with("multiples:")) return multiples_source(parse_count(spec.substr(10), "modulus"), bound);
    if (spec.starts_with("file:")) return file_source(spec.substr(5));
    if (spec.starts_with("list:")) {
        std::string text = spec.substr(5);
        std::replace(text.begin(), text.end(), ',', '\n');
        return parse_set_text("list", text);
    }
    throw Error(ErrorKind::invalid_argument, "unknown source '" + spec + "'");
}

GapSizing parse_sizing(const std::string& text, GapSizing fallback) {
    if (text.empty()) return fallback;
    if (text == "full") return GapSizing::full;
    if (text == "compact") return GapSizing::compact;
    throw Error(ErrorKind::invalid_argument, "unknown sizing '" + text + "' (expected full or compact)");
}

const char* sizing_name(GapSizing s) { return s == GapSizing::full ? "full" : "compact"; }

std::string join(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string join(const IntegerVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

std::string show(const ArithmeticProgression& ap) {
    return "AP(" + std::to_string(ap.length()) + "," + std::to_string(ap.base()) + "," + std::to_string(ap.step()) + ")";
}

Json envelope(const std::string& command) { return Json{{"schema_version", json::kSchemaVersion}, {"command", command}}; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void text_stream(std::ostream& out, const SolutionStream& s) {
    out << "basis:";
    for (const auto& v : s.basis.vectors) out << ' ' << join(v);
    out << "\nrequired AP length: " << s.required_ap_length << "\n";
    for (const auto& sol : s.solutions)
        out << "x=" << join(sol.x) << " ap=" << show(sol.witness_ap) << " center=" << sol.center.get_str()
            << " steps=" << join(sol.steps) << "\n";
    out << "solutions: " << s.solutions.size() << (s.exhausted ? " (bound exhausted)" : "") << "\n";
}

void text_report(std::ostream& out, const EnumerationReport& r) {
    out << "violating row: " << r.violating.row + 1 << ", C = " << r.violating.abs_sum.get_str() << "\n"
        << "bounds: b <= " << r.base_bound << ", d <= " << r.step_bound << " (k = " << r.k << ")\n"
        << "candidate APs: " << r.candidate_aps << ", admissible: " << r.admissible_aps << "\n";
    for (const auto& s : r.solutions) out << "x=" << join(s.x) << " ap=" << show(s.witness_ap) << "\n";
    out << "solutions: " << r.solutions.size() << "\n"
        << "brute force (bound " << r.search_bound << "): " << r.brute_force_solutions.size() << " solutions, agreement "
        << (r.brute_force_agreement ? "true" : "false") << "\n"
        << "source prime-like within bound: " << (r.source_prime_like ? "true" : "false") << "\n";
}

int dispatch(const std::string& command, const std::string& demo, const Options& o, std::ostream& out) {
    if (command == "check") {
        const IntegerMatrix m = load_matrix(o.matrix);
        const bool nd = is_null_diagonal(m);
        const NullspaceBasis b = integer_nullspace_basis(m, nd);
        const auto sums = row_sums(m);
        if (o.as_json) {
            Json j = envelope("check");
            j["rows"] = m.rows();
            j["cols"] = m.cols();
            j["rank"] = rank(m);
            j["nullspace_dimension"] = nullspace_dimension(m);
            j["row_sums"] = json::big_vector(sums);
            j["contains_ones"] = contains_ones_vector(m);
            j["null_diagonal"] = nd;
            j["basis"] = json::basis(b);
            emit(out, j);
        } else {
            out << "null-diagonal: " << (nd ? "true" : "false") << ", dim " << nullspace_dimension(m) << "\n"
                << "rank: " << rank(m) << "\n"
                << "row sums: " << join(sums) << "\n"
                << "basis:";
            for (const auto& v : b.vectors) out << ' ' << join(v);
            out << "\n";
        }
        return 0;
    }
    if (command == "solve") {
        const IntegerMatrix m = load_matrix(o.matrix);
        const auto src = make_source(o.source, o.bound);
        const GapSizing sizing = parse_sizing(o.sizing, GapSizing::full);
        const auto s = solution_stream(m, *src, o.count, o.bound, {sizing});
        if (o.as_json) {
            Json j = envelope("solve");
            j["source"] = src->name();
            j["sizing"] = sizing_name(sizing);
            j.update(json::stream(s));
            emit(out, j);
        } else {
            text_stream(out, s);
        }
        return 0;
    }
    if (command == "converse") {
        const IntegerMatrix m = load_matrix(o.matrix);
        const auto src = make_source(o.source, o.bound);
        const auto r = enumerate_constrained_solutions(m, o.k, *src, o.bound);
        if (o.as_json) {
            Json j = envelope("converse");
            j["source"] = src->name();
            j.update(json::report(r));
            emit(out, j);
        } else {
            text_report(out, r);
        }
        return 0;
    }
    if (command == "classify") {
        const IntegerMatrix m = load_matrix(o.matrix);
        const auto src = make_source(o.source, o.bound);
        const auto c = classify_matrix(m, o.k, *src, o.bound, o.count);
        if (o.as_json) {
            Json j = envelope("classify");
            j["source"] = src->name();
            j.update(json::classification(c));
            emit(out, j);
        } else {
            out << "verdict: " << to_string(c.verdict) << "\n";
            if (c.samples) text_stream(out, *c.samples);
            if (c.report) text_report(out, *c.report);
            if (c.verdict == Verdict::degenerate)
                out << "non-constant solutions within bound: " << c.degenerate_counterexamples << "\n";
        }
        return 0;
    }
    if (command == "find-ap") {
        const auto src = make_source(o.source, o.bound);
        ApCursor cursor(*src, o.k, o.bound);
        std::optional<ApKey> after;
        if (!o.after.empty()) {
            const auto comma = o.after.find(',');
            if (comma == std::string::npos) throw Error(ErrorKind::invalid_argument, "--after expects a,d");
            after = ApKey{parse_count(o.after.substr(0, comma), "--after base"),
                          parse_count(o.after.substr(comma + 1), "--after step")};
        }
        Json aps = Json::array();
        for (std::int64_t i = 0; i < o.count; ++i) {
            const auto ap = cursor.find_after(after);
            if (!ap) break;
            aps.push_back(json::ap(*ap));
            after = ApKey{ap->base(), ap->step()};
            if (!o.as_json) out << show(*ap) << " " << join(ap_elements(*ap)) << "\n";
        }
        if (o.as_json) {
            Json j = envelope("find-ap");
            j["source"] = src->name();
            j["k"] = o.k;
            j["search_bound"] = o.bound;
            j["found"] = !aps.empty();
            j["aps"] = std::move(aps);
            emit(out, j);
        } else if (aps.empty()) {
            out << "none\n";
        }
        return 0;
    }
    if (command == "audit-primelike") {
        const auto src = make_source(o.source, o.bound);
        const auto a = audit_prime_like(*src, o.k_max, o.bound);
        if (o.as_json) {
            Json j = envelope("audit-primelike");
            j["source"] = src->name();
            j.update(json::audit(a));
            emit(out, j);
        } else {
            out << "maximal APs checked: " << a.maximal_checked << ", violations: " << a.violations.size() << "\n"
                << "all APs checked: " << a.sub_aps_checked << ", violations: " << a.sub_ap_violations.size() << "\n"
                << "maximal APs with odd step: " << a.odd_steps.size() << "\n";
            for (const auto& ap : a.violations) out << "violation " << show(ap) << "\n";
            out << "prime-like: " << (a.prime_like() ? "true" : "false") << "\n";
        }
        return 0;
    }
    if (command == "demo") {
        const auto src = make_source(o.source, o.bound);
        if (demo == "equivalence") {
            const GapSizing sizing = parse_sizing(o.sizing, GapSizing::compact);
            const auto d = zero_solution_to_ap_demo(*src, o.n, o.count, o.bound, {sizing});
            if (o.as_json) {
                Json j = envelope("demo equivalence");
                j["source"] = src->name();
                j["n"] = o.n;
                j["sizing"] = sizing_name(sizing);
                Json aps = Json::array();
                for (const auto& ap : d.aps) aps.push_back(json::ap(ap));
                j["aps"] = std::move(aps);
                j["stream"] = json::stream(d.stream);
                emit(out, j);
            } else {
                for (std::size_t i = 0; i < d.aps.size(); ++i)
                    out << join(d.stream.solutions[i].x) << " -> " << show(d.aps[i]) << "\n";
                out << "progressions: " << d.aps.size() << (d.stream.exhausted ? " (bound exhausted)" : "") << "\n";
            }
            return 0;
        }
        if (demo == "average") {
            const GapSizing sizing = parse_sizing(o.sizing, GapSizing::compact);
            const auto tuples = average_tuples(*src, o.n, o.count, o.bound, {sizing});
            if (o.as_json) {
                Json j = envelope("demo average");
                j["source"] = src->name();
                j["n"] = o.n;
                j["sizing"] = sizing_name(sizing);
                Json list = Json::array();
                for (const auto& t : tuples)
                    list.push_back(Json{{"tuple", t.tuple}, {"average", t.average}, {"ap", json::ap(t.witness_ap)}});
                j["tuples"] = std::move(list);
                emit(out, j);
            } else {
                for (const auto& t : tuples) out << join(t.tuple) << " -> " << t.average << "\n";
                out << "tuples: " << tuples.size() << "\n";
            }
            return 0;
        }
        if (demo == "et-sum") {
            const auto s = erdos_turan_partial_sum(*src, o.bound);
            if (o.as_json) {
                Json j = envelope("demo et-sum");
                j["source"] = src->name();
                j["bound"] = o.bound;
                j["terms"] = s.terms;
                j["numerator"] = json::big(s.value.get_num());
                j["denominator"] = json::big(s.value.get_den());
                j["decimal"] = to_decimal(s.value, o.digits);
                j["skipped_zero"] = s.skipped_zero;
                emit(out, j);
            } else {
                out << "terms: " << s.terms << "\n"
                    << "sum: " << s.value.get_str() << "\n"
                    << "decimal: " << to_decimal(s.value, o.digits) << "\n";
            }
            return 0;
        }
    }
    throw Error(ErrorKind::invalid_argument, "no subcommand given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver for linear systems with solutions inside arithmetic progressions", "apsolve"};
    app.require_subcommand(1);
    Options o;

    auto add_matrix = [&](CLI::App* c) { c->add_option("-m,--matrix", o.matrix, "matrix file or literal like [[1,1,-2]]")->required(); };
    auto add_source = [&](CLI::App* c) {
        c->add_option("--source", o.source, "primes | naturals | multiples:M | file:PATH | list:a,b,...");
        c->add_option("--bound", o.bound, "search bound B");
    };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "JSON output"); };

    auto* check = app.add_subcommand("check", "null-diagonal test, rank, row sums and nullspace basis");
    add_matrix(check);
    add_json(check);

    auto* solve = app.add_subcommand("solve", "stream solutions whose coordinates lie in one AP of the source");
    add_matrix(solve);
    add_source(solve);
    solve->add_option("--count", o.count, "number of solutions");
    solve->add_option("--sizing", o.sizing, "full (default) or compact");
    add_json(solve);

    auto* converse = app.add_subcommand("converse", "finiteness certificate for a matrix with a nonzero row sum");
    add_matrix(converse);
    add_source(converse);
    converse->add_option("-k", o.k, "AP length (>= 3)");
    add_json(converse);

    auto* classify = app.add_subcommand("classify", "infinite family, finite or degenerate");
    add_matrix(classify);
    add_source(classify);
    classify->add_option("-k", o.k, "AP length (>= 3)");
    classify->add_option("--count", o.count, "number of sample solutions");
    add_json(classify);

    auto* find = app.add_subcommand("find-ap", "least APs of length k in the source");
    add_source(find);
    find->add_option("-k", o.k, "AP length");
    find->add_option("--after", o.after, "start strictly after base,step");
    find->add_option("--count", o.count, "number of APs")->default_val(1);
    add_json(find);

    auto* audit = app.add_subcommand("audit-primelike", "check gcd(a, d) = 1 for APs of length >= 3");
    add_source(audit);
    audit->add_option("--k-max", o.k_max, "longest AP length reported");
    add_json(audit);

    auto* demo = app.add_subcommand("demo", "equivalence, average and reciprocal-sum demos");
    demo->require_subcommand(1);
    auto* eq = demo->add_subcommand("equivalence", "recover APs from progression-matrix solutions");
    add_source(eq);
    eq->add_option("-n", o.n, "progression length (>= 3)");
    eq->add_option("--count", o.count, "number of progressions");
    eq->add_option("--sizing", o.sizing, "compact (default) or full");
    add_json(eq);
    auto* avg = demo->add_subcommand("average", "tuples whose mean is in the source");
    add_source(avg);
    avg->add_option("-n", o.n, "tuple size (>= 2)");
    avg->add_option("--count", o.count, "number of tuples");
    avg->add_option("--sizing", o.sizing, "compact (default) or full");
    add_json(avg);
    auto* et = demo->add_subcommand("et-sum", "exact partial sum of reciprocals");
    add_source(et);
    et->add_option("--digits", o.digits, "fractional digits in the decimal rendering");
    add_json(et);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    std::string command, demo_name;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    for (auto* sub : demo->get_subcommands()) demo_name = sub->get_name();

    try {
        return dispatch(command, demo_name, o, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::invariant_violation ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace apsolve
