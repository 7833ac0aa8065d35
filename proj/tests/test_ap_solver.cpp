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

#include <doctest.h>

#include <random>
#include <set>

#include "apsolve/ap_solver.hpp"
#include "apsolve/equivalence_demos.hpp"
#include "apsolve/error.hpp"
#include "oracles.hpp"

using namespace apsolve;
using V = std::vector<std::int64_t>;

namespace {

NullspaceBasis basis_of(std::initializer_list<std::initializer_list<long>> vs) {
    NullspaceBasis b;
    for (const auto& v : vs) {
        IntegerVector r;
        for (long e : v) r.emplace_back(e);
        b.vectors.push_back(std::move(r));
    }
    b.ambient_dim = b.vectors.front().size();
    b.ones_first = true;
    return b;
}

std::vector<std::vector<long>> small(const IntegerMatrix& m) {
    std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
    return out;
}

}  // namespace

TEST_CASE("plan examples") {
    auto p = plan(basis_of({{1, 1, 1}, {1, -1, 0}}));
    CHECK(p.max_entry_plus_one == 2);
    CHECK(p.gap_dim == 1);
    CHECK(p.volume_each == 3);
    CHECK(p.required_ap_length == 3);

    p = plan(basis_of({{1, 1, 1, 1}, {0, 1, 2, 3}}));
    CHECK(p.max_entry_plus_one == 4);
    CHECK(p.required_ap_length == 7);

    p = plan(basis_of({{1, 1, 1, 1}, {1, -1, 0, 0}, {0, 1, 0, -1}}));
    CHECK(p.max_entry_plus_one == 2);
    CHECK(p.gap_dim == 2);
    CHECK(p.required_ap_length == 9);
}

TEST_CASE("plan rejects unsuitable bases") {
    auto b = basis_of({{1, 1, 1}, {1, -1, 0}});
    b.ones_first = false;
    CHECK_THROWS_WITH_AS(plan(b), "basis not ones-first", Error);
    CHECK_THROWS_WITH_AS(plan(basis_of({{1, 1}})), "dimension < 2", Error);
}

TEST_CASE("compact sizing only spans the offsets") {
    CHECK(required_ap_length(basis_of({{1, 1, 1}, {1, -1, 0}}), GapSizing::compact) == 3);
    CHECK(required_ap_length(basis_of({{1, 1, 1, 1}, {0, 1, 2, 3}}), GapSizing::compact) == 4);
    CHECK(required_ap_length(basis_of({{1, 1, 1, 1}, {1, -1, 0, 0}, {1, 0, -1, 0}}), GapSizing::compact) == 4);
}

TEST_CASE("construct_solution follows the centered GAP") {
    const auto b = basis_of({{1, 1, 1}, {1, -1, 0}});
    const auto s = construct_solution(b, {3, 3, 2});
    CHECK(s.center == 5);
    CHECK(s.steps == V{2});
    CHECK(s.x == V{7, 3, 5});
    CHECK(s.x[0] + s.x[1] - 2 * s.x[2] == 0);
    CHECK(verify_solution(IntegerMatrix{{1, 1, -2}}, s));

    try {
        construct_solution(b, {2, 3, 2});
        FAIL("expected ap-too-short");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ap_too_short);
    }
}

TEST_CASE("construct_solution with a length-7 prime witness") {
    const auto b = basis_of({{1, 1, 1, 1}, {0, 1, 2, 3}});
    const auto primes = primes_source(1000);
    const auto found = find_ap(*primes, 7, 1000);
    REQUIRE(found.found());
    CHECK(*found.ap == ArithmeticProgression(7, 7, 150));
    const auto s = construct_solution(b, *found.ap);
    CHECK(verify_solution(progression_matrix(4), s));
    for (auto v : s.x) CHECK(oracle::is_prime(v));
    CHECK(*std::max_element(s.x.begin(), s.x.end()) > *std::min_element(s.x.begin(), s.x.end()));
}

TEST_CASE("verify_solution examples") {
    const IntegerMatrix m{{1, 1, -2}};
    const ArithmeticProgression ap(3, 3, 2);
    CHECK(verify_solution(m, {{7, 3, 5}, ap, 5, {2}}));
    CHECK_FALSE(verify_solution(m, {{5, 5, 5}, ap, 5, {}}));
    CHECK_FALSE(verify_solution(m, {{7, 4, 5}, ap, 5, {2}}));
    CHECK_FALSE(verify_solution(m, {{7, 3}, ap, 5, {2}}));
}

TEST_CASE("solution stream over the primes") {
    const IntegerMatrix m{{1, 1, -2}};
    const auto primes = primes_source(500);
    const auto s = solution_stream(m, *primes, 5, 500);
    REQUIRE(s.solutions.size() == 5);
    CHECK_FALSE(s.exhausted);
    CHECK(s.solutions[0].x == V{7, 3, 5});
    CHECK(s.solutions[0].witness_ap == ArithmeticProgression(3, 3, 2));

    const auto reference =
        oracle::ap_constrained_solutions(small(m), 3, [&](std::int64_t x) { return primes->contains(x); }, 500);
    std::set<V> seen;
    for (const auto& sol : s.solutions) {
        CHECK(verify_solution(m, sol));
        CHECK(reference.count(sol.x) == 1);
        CHECK(seen.insert(sol.x).second);
    }
}

TEST_CASE("solution stream rejects matrices that are not null-diagonal") {
    const auto primes = primes_source(100);
    try {
        solution_stream(IntegerMatrix{{1, -1}}, *primes, 1, 100);
        FAIL("expected not-null-diagonal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_null_diagonal);
    }
}

TEST_CASE("solution stream over multiples of 5") {
    const auto fives = multiples_source(5, 1000);
    const auto s = solution_stream(IntegerMatrix{{1, 1, -2}}, *fives, 3, 1000);
    REQUIRE(s.solutions.size() == 3);
    for (const auto& sol : s.solutions)
        for (auto v : sol.x) CHECK(v % 5 == 0);
}

TEST_CASE("solution stream reports exhaustion") {
    const auto primes = primes_source(100);
    const auto s = solution_stream(IntegerMatrix{{1, 1, -2}}, *primes, 100000, 30);
    CHECK(s.exhausted);
    CHECK(s.solutions.size() < 100000);
    CHECK(s.aps_consumed == static_cast<std::int64_t>(s.solutions.size()) + s.duplicates_skipped);
}

TEST_CASE("average tuples") {
    const auto primes = primes_source(200);
    const auto pairs = average_tuples(*primes, 2, 3, 100);
    REQUIRE(pairs.size() == 3);
    std::set<std::pair<std::int64_t, std::int64_t>> brute;
    for (std::int64_t p = 2; p <= 100; ++p)
        for (std::int64_t q = 2; q <= 100; ++q)
            if (p != q && oracle::is_prime(p) && oracle::is_prime(q) && (p + q) % 2 == 0 &&
                oracle::is_prime((p + q) / 2))
                brute.insert({p, q});
    for (const auto& t : pairs) {
        REQUIRE(t.tuple.size() == 2);
        CHECK(t.tuple[0] != t.tuple[1]);
        CHECK(t.tuple[0] + t.tuple[1] == 2 * t.average);
        CHECK(oracle::is_prime(t.average));
        CHECK(brute.count({t.tuple[0], t.tuple[1]}) == 1);
    }
    CHECK(pairs[0].tuple == V{7, 3});
    CHECK(pairs[0].average == 5);

    const auto triples = average_tuples(*primes, 3, 1, 200);
    REQUIRE(triples.size() == 1);
    const auto& t = triples[0];
    CHECK(t.tuple[0] + t.tuple[1] + t.tuple[2] == 3 * t.average);
    CHECK_FALSE((t.tuple[0] == t.tuple[1] && t.tuple[1] == t.tuple[2]));
    for (auto v : t.tuple) CHECK(oracle::is_prime(v));
    CHECK(oracle::is_prime(t.average));

    CHECK_THROWS_AS(average_tuples(*primes, 1, 1, 100), Error);
}

TEST_CASE("oracle containment on the naturals") {
    const auto nat = naturals_source(60);
    for (const IntegerMatrix& m : {IntegerMatrix{{1, 1, -2}}, IntegerMatrix{{1, 2, -3}}, progression_matrix(4)}) {
        const auto s = solution_stream(m, *nat, 1000000, 60);
        CHECK(s.exhausted);
        const auto reference = oracle::ap_constrained_solutions(small(m), s.required_ap_length,
                                                                [](std::int64_t x) { return x >= 0; }, 60);
        for (const auto& sol : s.solutions) CHECK(reference.count(sol.x) == 1);
    }
}

TEST_CASE("property: soundness across sources, matrices and sign flips") {
    std::vector<IntegerMatrix> matrices{IntegerMatrix{{1, 1, -2}}, IntegerMatrix{{1, 2, -3}},
                                        IntegerMatrix{{2, -1, -1}, {0, 3, -3}, {0, 0, 0}}, progression_matrix(4),
                                        progression_matrix(5), IntegerMatrix{{1, 1, 1, -3}},
                                        IntegerMatrix{{1, -1, 2, -2}}};
    std::vector<SourcePtr> sources{primes_source(20000), naturals_source(400), multiples_source(3, 600)};
    std::int64_t checked = 0;
    for (const auto& m : matrices) {
        if (!is_null_diagonal(m)) continue;
        for (const auto& src : sources)
            for (GapSizing sizing : {GapSizing::full, GapSizing::compact}) {
                const auto s = solution_stream(m, *src, 40, src->known_bound(), {sizing});
                for (const auto& sol : s.solutions) {
                    CHECK(verify_solution(m, sol));
                    ++checked;
                }
                // Sign flips of the non-constant basis vectors keep every
                // invariant intact.
                if (s.solutions.empty()) continue;
                for (std::size_t i = 1; i < s.basis.dimension(); ++i) {
                    NullspaceBasis flipped = s.basis;
                    for (auto& e : flipped.vectors[i]) e = -e;
                    ApCursor cursor(*src, required_ap_length(flipped, sizing), src->known_bound());
                    for (int j = 0; j < 10; ++j) {
                        const auto ap = cursor.next();
                        if (!ap) break;
                        CHECK(verify_solution(m, construct_solution(flipped, *ap, sizing)));
                        ++checked;
                    }
                }
            }
    }
    CHECK(checked >= 1000);
}

TEST_CASE("property: plan is monotone in the entry size and dimension") {
    std::int64_t previous = 0;
    for (long e = 1; e <= 6; ++e) {
        const auto len = plan(basis_of({{1, 1, 1}, {e, -e, 0}})).required_ap_length;
        CHECK(len >= previous);
        previous = len;
    }
    CHECK(plan(basis_of({{1, 1, 1, 1}, {1, -1, 0, 0}})).required_ap_length <=
          plan(basis_of({{1, 1, 1, 1}, {1, -1, 0, 0}, {0, 1, -1, 0}})).required_ap_length);
}
