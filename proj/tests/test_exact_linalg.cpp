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

#include <algorithm>
#include <random>

#include "apsolve/error.hpp"
#include "apsolve/exact_linalg.hpp"
#include "oracles.hpp"

using namespace apsolve;

namespace {

IntegerMatrix from_small(const std::vector<std::vector<long>>& rows) {
    std::vector<IntegerVector> big;
    for (const auto& r : rows) {
        IntegerVector v;
        for (long e : r) v.emplace_back(e);
        big.push_back(std::move(v));
    }
    return IntegerMatrix(std::move(big));
}

IntegerVector ivec(std::initializer_list<long> xs) {
    IntegerVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

void check_basis_invariants(const IntegerMatrix& m, const NullspaceBasis& b) {
    REQUIRE(b.dimension() == nullspace_dimension(m));
    for (const auto& r : b.vectors) {
        REQUIRE(r.size() == m.cols());
        for (const auto& e : m.apply(r)) CHECK(e == 0);
    }
    if (b.dimension() > 0) CHECK(oracle::rational_rank(b.vectors) == b.dimension());
    if (b.ones_first) CHECK(b.vectors.front() == IntegerVector(m.cols(), Integer(1)));
}

}  // namespace

TEST_CASE("rank and nullspace dimension examples") {
    CHECK(rank(IntegerMatrix{{1, 1, -2}}) == 1);
    CHECK(rank(IntegerMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(rank(IntegerMatrix{{1, -2, 1, 0}, {0, 1, -2, 1}}) == 2);
    CHECK(oracle::rational_rank(std::vector<std::vector<long>>{{1, -2, 1, 0}, {0, 1, -2, 1}}) == 2);

    CHECK(nullspace_dimension(IntegerMatrix{{1, 1, -2}}) == 2);
    CHECK(nullspace_dimension(IntegerMatrix{{1, -1}}) == 1);
    CHECK(nullspace_dimension(IntegerMatrix{{1, -2, 1, 0}, {0, 1, -2, 1}}) == 2);
}

TEST_CASE("row sums and the ones vector") {
    CHECK(row_sums(IntegerMatrix{{1, 1, -2}}) == ivec({0}));
    CHECK(row_sums(IntegerMatrix{{1, 1, -1}}) == ivec({1}));
    CHECK(row_sums(IntegerMatrix{{1, -2, 1, 0}, {0, 1, -2, 1}}) == ivec({0, 0}));

    CHECK(contains_ones_vector(IntegerMatrix{{1, 1, -2}}));
    CHECK_FALSE(contains_ones_vector(IntegerMatrix{{1, 1, -1}}));
    CHECK(contains_ones_vector(IntegerMatrix{{2, -1, -1}, {0, 3, -3}}));
}

TEST_CASE("null-diagonal examples") {
    CHECK(is_null_diagonal(IntegerMatrix{{1, 1, -2}}));
    CHECK_FALSE(is_null_diagonal(IntegerMatrix{{1, -1}}));
    CHECK_FALSE(is_null_diagonal(IntegerMatrix{{1, 1, -1}}));
    // The zero matrix is accepted: its nullspace is everything.
    CHECK(is_null_diagonal(IntegerMatrix{{0, 0}}));
    CHECK_FALSE(is_null_diagonal(IntegerMatrix{{0}}));
}

TEST_CASE("ones-first basis for x1 + x2 - 2 x3") {
    const IntegerMatrix m{{1, 1, -2}};
    const auto b = integer_nullspace_basis(m, true);
    check_basis_invariants(m, b);
    CHECK(b.vectors[1] == ivec({1, -1, 0}));
}

TEST_CASE("ones-first basis spans the progression space") {
    const IntegerMatrix m{{1, -2, 1, 0}, {0, 1, -2, 1}};
    const auto b = integer_nullspace_basis(m, true);
    check_basis_invariants(m, b);
    // span equality: adding the generators does not raise the rank.
    auto all = b.vectors;
    all.push_back(ivec({1, 1, 1, 1}));
    all.push_back(ivec({0, 1, 2, 3}));
    CHECK(oracle::rational_rank(all) == 2);
}

TEST_CASE("ones-first on a matrix without the ones vector fails") {
    try {
        integer_nullspace_basis(IntegerMatrix{{1, 1, -1}}, true);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_null_diagonal);
        CHECK(std::string(e.what()).find("not null-diagonal") != std::string::npos);
    }
    CHECK_THROWS_AS(integer_nullspace_basis(IntegerMatrix{{1, -1}}, true), Error);
}

TEST_CASE("basis vectors are primitive with a positive leading entry") {
    const IntegerMatrix m{{6, 4, -10}, {3, 2, -5}};
    const auto b = integer_nullspace_basis(m, false);
    check_basis_invariants(m, b);
    for (const auto& v : b.vectors) {
        Integer g = 0;
        for (const auto& e : v) g = gcd(g, e);
        CHECK(g == 1);
        CHECK(*std::find_if(v.begin(), v.end(), [](const Integer& e) { return e != 0; }) > 0);
    }
}

TEST_CASE("entries beyond 64 bits stay exact") {
    Integer huge("123456789012345678901234567890");
    const IntegerMatrix m({{huge, -huge, Integer(0)}, {Integer(0), huge, -huge}});
    CHECK(rank(m) == 2);
    CHECK(contains_ones_vector(m));
    CHECK_FALSE(is_null_diagonal(m));
    const IntegerMatrix w({{huge, huge, -2 * huge}});
    const auto b = integer_nullspace_basis(w, true);
    check_basis_invariants(w, b);
}

TEST_CASE("property: rank-nullity, row sums and basis invariants on random matrices") {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> dm(1, 4), dn(1, 6);
    for (int trial = 0; trial < 400; ++trial) {
        const auto rows = oracle::random_matrix(rng, dm(rng), dn(rng), -10, 10);
        const IntegerMatrix m = from_small(rows);
        CHECK(rank(m) == oracle::rational_rank(rows));
        CHECK(rank(m) + nullspace_dimension(m) == m.cols());

        const auto sums = row_sums(m);
        const bool all_zero = std::all_of(sums.begin(), sums.end(), [](const Integer& s) { return s == 0; });
        const auto ones = m.apply(IntegerVector(m.cols(), Integer(1)));
        const bool ones_in = std::all_of(ones.begin(), ones.end(), [](const Integer& s) { return s == 0; });
        CHECK(contains_ones_vector(m) == all_zero);
        CHECK(all_zero == ones_in);

        check_basis_invariants(m, integer_nullspace_basis(m, false));
    }
}

TEST_CASE("property: ones-first bases on random null-diagonal matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dm(1, 3), dn(3, 7);
    int built = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto rows = oracle::random_matrix(rng, dm(rng), dn(rng), -6, 6);
        for (auto& r : rows) {  // force row sums to zero through the last column
            long s = 0;
            for (std::size_t j = 0; j + 1 < r.size(); ++j) s += r[j];
            r.back() = -s;
        }
        const IntegerMatrix m = from_small(rows);
        if (!is_null_diagonal(m)) continue;
        ++built;
        const auto b = integer_nullspace_basis(m, true);
        check_basis_invariants(m, b);
        // Determinism: same input, same bits.
        CHECK(integer_nullspace_basis(m, true) == b);
    }
    CHECK(built > 100);
}

TEST_CASE("property: null-diagonality survives row permutation and row scaling") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto rows = oracle::random_matrix(rng, 3, 5, -4, 4);
        if (trial % 2 == 0)
            for (auto& r : rows) r.back() = -(r[0] + r[1] + r[2] + r[3]);
        const bool nd = is_null_diagonal(from_small(rows));
        auto permuted = rows;
        std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
        CHECK(is_null_diagonal(from_small(permuted)) == nd);
        auto scaled = rows;
        for (auto& v : scaled[1]) v *= -7;
        CHECK(is_null_diagonal(from_small(scaled)) == nd);
    }
}

TEST_CASE("span coefficients") {
    const std::vector<IntegerVector> vs{ivec({1, -1, 0}), ivec({2, 0, 1})};
    const auto c = span_coefficients(vs, ivec({1, 1, 1}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == -1);
    CHECK((*c)[1] == 1);
    CHECK_FALSE(span_coefficients(vs, ivec({0, 0, 1})).has_value());
    CHECK_FALSE(span_coefficients({ivec({1, 0, 0})}, ivec({0, 1, 0})).has_value());
}

TEST_CASE("matrix text format") {
    const auto m = parse_matrix_text("# second differences\n2 4\n1 -2 1 0\n0 1 -2 1\n");
    CHECK(m == IntegerMatrix{{1, -2, 1, 0}, {0, 1, -2, 1}});
    CHECK(parse_matrix_text(format_matrix(m)) == m);

    const std::string big = "99999999999999999999999999999999999999";
    const auto h = parse_matrix_text("1 2\n" + big + " -" + big + "\n");
    CHECK(h(0, 0).get_str() == big);
    CHECK(format_matrix(h) == "1 2\n" + big + " -" + big + "\n");

    CHECK_THROWS_AS(parse_matrix_text("2 2\n1 2\n"), Error);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n1 x\n"), Error);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n1 2 3\n"), Error);
    CHECK_THROWS_AS(parse_matrix_text(""), Error);

    CHECK(parse_matrix_literal("[[1,1,-2]]") == IntegerMatrix{{1, 1, -2}});
    CHECK(parse_matrix_literal(" [ [1, -2, 1, 0], [0, 1, -2, 1] ] ") == m);
    CHECK_THROWS_AS(parse_matrix_literal("[[1,2],[3]]"), Error);
    CHECK_THROWS_AS(parse_matrix_literal("[[1,2]"), Error);
}
