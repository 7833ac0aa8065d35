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

#include "apsolve/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "apsolve/error.hpp"

namespace apsolve {

EchelonForm bareiss_echelon(const std::vector<IntegerVector>& input, std::size_t cols) {
    std::vector<IntegerVector> a = input;
    const std::size_t m = a.size();
    EchelonForm out;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        const Integer& pivot = a[row][col];
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer t = pivot * a[i][j] - a[i][col] * a[row][j];
                // Sylvester's identity: every intermediate is a minor, so the
                // division by the previous pivot is exact.
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++row;
    }
    a.resize(row);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const IntegerMatrix& m) { return bareiss_echelon(m.to_rows(), m.cols()).rank(); }

std::size_t rank(const std::vector<IntegerVector>& vectors) {
    if (vectors.empty()) return 0;
    return bareiss_echelon(vectors, vectors.front().size()).rank();
}

std::size_t nullspace_dimension(const IntegerMatrix& m) { return m.cols() - rank(m); }

IntegerVector row_sums(const IntegerMatrix& m) {
    IntegerVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer s = 0;
        for (const auto& e : m.row(i)) s += e;
        out[i] = std::move(s);
    }
    return out;
}

bool contains_ones_vector(const IntegerMatrix& m) {
    auto sums = row_sums(m);
    return std::all_of(sums.begin(), sums.end(), [](const Integer& s) { return s == 0; });
}

bool is_null_diagonal(const IntegerMatrix& m) {
    return contains_ones_vector(m) && nullspace_dimension(m) >= 2;
}

IntegerVector normalize_primitive(IntegerVector v) {
    Integer g = 0;
    for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 0) return v;
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& e) { return e != 0; });
    if (*first < 0) g = -g;
    for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    return v;
}

namespace {

std::vector<IntegerVector> free_column_basis(const IntegerMatrix& m) {
    const std::size_t n = m.cols();
    EchelonForm ech = bareiss_echelon(m.to_rows(), n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<IntegerVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(n, Rational(0));
        x[f] = 1;
        for (std::size_t i = ech.rank(); i-- > 0;) {
            const std::size_t pc = ech.pivot_cols[i];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (x[j] != 0) acc += Rational(ech.rows[i][j]) * x[j];
            x[pc] = -acc / Rational(ech.rows[i][pc]);
        }
        Integer lcm = 1;
        for (const auto& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        IntegerVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = x[j].get_num() * (lcm / x[j].get_den());
        basis.push_back(normalize_primitive(std::move(v)));
    }
    return basis;
}

// Shift by a multiple of the ones vector so max + min is 0 or 1.
IntegerVector center_against_ones(IntegerVector v) {
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    Integer shift;
    Integer sum = *lo + *hi;
    mpz_fdiv_q_2exp(shift.get_mpz_t(), sum.get_mpz_t(), 1);
    for (auto& e : v) e -= shift;
    return normalize_primitive(std::move(v));
}

}  // namespace

NullspaceBasis integer_nullspace_basis(const IntegerMatrix& m, bool ones_first) {
    NullspaceBasis out;
    out.ambient_dim = m.cols();
    out.vectors = free_column_basis(m);
    if (!ones_first) return out;

    if (!is_null_diagonal(m))
        throw Error(ErrorKind::not_null_diagonal, "not null-diagonal: ones-first basis needs row sums 0 and nullspace dimension >= 2");

    const IntegerVector ones(m.cols(), Integer(1));
    auto coeffs = span_coefficients(out.vectors, ones);
    if (!coeffs)
        throw Error(ErrorKind::invariant_violation, "ones vector not in the computed nullspace span");
    // Steinitz exchange: ones replaces the last vector it depends on.
    std::size_t drop = coeffs->size();
    while (drop-- > 0 && (*coeffs)[drop] == 0) {
    }
    std::vector<IntegerVector> vectors;
    vectors.reserve(out.vectors.size());
    vectors.push_back(ones);
    for (std::size_t i = 0; i < out.vectors.size(); ++i)
        if (i != drop) vectors.push_back(center_against_ones(std::move(out.vectors[i])));
    out.vectors = std::move(vectors);
    out.ones_first = true;

    for (const auto& r : out.vectors)
        for (const auto& e : m.apply(r))
            if (e != 0) throw Error(ErrorKind::invariant_violation, "basis vector not annihilated by M");
    return out;
}

std::optional<std::vector<Rational>> span_coefficients(const std::vector<IntegerVector>& vectors,
                                                       std::span<const Integer> target) {
    const std::size_t d = vectors.size();
    const std::size_t n = target.size();
    // Augmented n x (d + 1) system with the vectors as columns.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(d + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) a[j][i] = vectors[i].at(j);
        a[j][d] = target[j];
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[row][col];
            for (std::size_t j = col; j <= d; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][d] != 0) return std::nullopt;
    std::vector<Rational> c(d, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = a[i][d] / a[i][pivots[i]];
    return c;
}

}  // namespace apsolve
