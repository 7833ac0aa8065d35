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

#include <numeric>
#include <random>

#include "apsolve/converse_analysis.hpp"
#include "apsolve/error.hpp"
#include "oracles.hpp"

using namespace apsolve;
using V = std::vector<std::int64_t>;

TEST_CASE("violating row") {
    auto r = violating_row(IntegerMatrix{{1, 1, -1}});
    REQUIRE(r);
    CHECK(r->row == 0);
    CHECK(r->abs_sum == 3);
    CHECK_FALSE(violating_row(IntegerMatrix{{1, 1, -2}}));
    r = violating_row(IntegerMatrix{{0, 0, 0}, {2, -1, 0}});
    REQUIRE(r);
    CHECK(r->row == 1);
    CHECK(r->abs_sum == 3);
}

TEST_CASE("x1 + x2 = x3 has no AP-constrained prime solutions") {
    const auto primes = primes_source(10000);
    const auto rep = enumerate_constrained_solutions(IntegerMatrix{{1, 1, -1}}, 3, *primes, 10000);
    CHECK(rep.violating.abs_sum == 3);
    CHECK(rep.base_bound == 9);
    CHECK(rep.step_bound == 9);
    CHECK(rep.solutions.empty());
    CHECK(rep.brute_force_solutions.empty());
    CHECK(rep.brute_force_agreement);
    CHECK(rep.source_prime_like);
    CHECK(rep.bounded_region_covered);
    CHECK(rep.candidate_aps == 10 * 9);
    CHECK(rep.lambda_assignments_covered == 10 * 9 * 27);
}

TEST_CASE("x1 + x2 + x3 = 0 has no natural solutions at all") {
    const auto primes = primes_source(10000);
    const auto rep = enumerate_constrained_solutions(IntegerMatrix{{1, 1, 1}}, 3, *primes, 10000);
    CHECK(rep.solutions.empty());
    CHECK(rep.brute_force_agreement);
}

TEST_CASE("converse preconditions") {
    const auto primes = primes_source(100);
    try {
        enumerate_constrained_solutions(IntegerMatrix{{1, 1, -2}}, 3, *primes, 100);
        FAIL("expected not-applicable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_applicable);
        CHECK(std::string(e.what()).find("matrix is null-diagonal-summed") != std::string::npos);
    }
    CHECK_THROWS_AS(enumerate_constrained_solutions(IntegerMatrix{{1, 1, -1}}, 2, *primes, 100), Error);
}

TEST_CASE("bounded enumeration finds solutions where they exist") {
    // 3 x1 = x2 + x3, row sum 1.
    const IntegerMatrix m{{3, -1, -1, 0}};
    const auto primes = primes_source(2000);
    const auto rep = enumerate_constrained_solutions(m, 3, *primes, 2000);
    const auto ref = oracle::ap_constrained_solutions({{3, -1, -1, 0}}, 3,
                                                      [&](std::int64_t x) { return primes->contains(x); }, 2000);
    CHECK(rep.brute_force_agreement);
    CHECK(rep.brute_force_solutions.size() == ref.size());
    for (const auto& s : rep.solutions) {
        CHECK(ref.count(s.x) == 1);
        CHECK(std::gcd(s.witness_ap.base(), s.witness_ap.step()) == 1);
        CHECK(s.witness_ap.base() <= rep.base_bound);
        CHECK(s.witness_ap.step() <= rep.step_bound);
        CHECK(verify_ap_constrained(m, s.x, s.witness_ap));
    }
}

TEST_CASE("base zero is enumerated when 0 is a member") {
    // Naturals include 0: x1 - 2 x2 + 0 x3 = 0 has x = (2d, d, *) inside AP(k, 0, d).
    const auto nat = naturals_source(200);
    const IntegerMatrix m{{1, -2, 0}};
    const auto rep = enumerate_constrained_solutions(m, 3, *nat, 200);
    bool saw_zero_base = false;
    for (const auto& s : rep.solutions) saw_zero_base = saw_zero_base || s.witness_ap.base() == 0;
    CHECK(saw_zero_base);
    CHECK_FALSE(rep.source_prime_like);
}

TEST_CASE("property: search-space accounting and brute-force agreement on random matrices") {
    std::mt19937_64 rng(1234);
    const auto primes = primes_source(3000);
    int tested = 0;
    while (tested < 25) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
        const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        const auto a = oracle::random_matrix(rng, rows, n, -3, 3);
        std::vector<IntegerVector> big;
        for (const auto& r : a) {
            IntegerVector v;
            for (long e : r) v.emplace_back(e);
            big.push_back(std::move(v));
        }
        const IntegerMatrix m(std::move(big));
        const auto vr = violating_row(m);
        if (!vr) continue;
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(3, 4)(rng);
        const std::int64_t bound = 1500;
        const auto rep = enumerate_constrained_solutions(m, k, *primes, bound);
        const std::int64_t ck = vr->abs_sum.get_si() * k;
        CHECK(rep.candidate_aps == (ck + 1) * ck);
        Integer per = 1;
        for (std::size_t i = 0; i < n; ++i) per *= static_cast<long>(k);
        CHECK(rep.lambda_assignments_covered == per * static_cast<long>(rep.candidate_aps));
        CHECK(rep.lambda_assignments_evaluated <= rep.lambda_assignments_covered);
        CHECK(rep.brute_force_agreement);
        ++tested;
    }
}

TEST_CASE("classify partitions matrices") {
    const auto primes = primes_source(2000);
    auto c = classify_matrix(IntegerMatrix{{1, 1, -2}}, 3, *primes, 1000, 4);
    CHECK(c.verdict == Verdict::infinite_family);
    REQUIRE(c.samples);
    CHECK(c.samples->solutions.size() == 4);
    for (const auto& s : c.samples->solutions) CHECK(verify_solution(IntegerMatrix{{1, 1, -2}}, s));

    c = classify_matrix(IntegerMatrix{{1, 1, -1}}, 3, *primes, 2000, 4);
    CHECK(c.verdict == Verdict::finite);
    REQUIRE(c.report);
    CHECK(c.report->solutions.empty());

    c = classify_matrix(IntegerMatrix{{1, -1}}, 3, *naturals_source(100), 100, 4);
    CHECK(c.verdict == Verdict::degenerate);
    CHECK(c.degenerate_counterexamples == 0);

    c = classify_matrix(IntegerMatrix{{1, -1, 0}, {0, 1, -1}}, 4, *primes, 500, 4);
    CHECK(c.verdict == Verdict::degenerate);
    CHECK(c.degenerate_counterexamples == 0);
    CHECK(std::string(to_string(Verdict::finite)) == "finite");
}
