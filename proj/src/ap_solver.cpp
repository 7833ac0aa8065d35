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

#include "apsolve/ap_solver.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "apsolve/error.hpp"

namespace apsolve {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t saturating(const Integer& v) { return v.fits_slong_p() ? v.get_si() : kMax; }

void require_planable(const NullspaceBasis& basis) {
    if (!basis.ones_first) throw Error(ErrorKind::invalid_argument, "basis not ones-first");
    if (basis.dimension() < 2) throw Error(ErrorKind::invalid_argument, "dimension < 2");
}

// Offsets of the coordinates from the witness base under compact sizing.
IntegerVector compact_offsets(const NullspaceBasis& basis) {
    IntegerVector o(basis.ambient_dim, Integer(0));
    for (std::size_t i = 1; i < basis.dimension(); ++i)
        for (std::size_t j = 0; j < o.size(); ++j) o[j] += basis.vectors[i][j];
    return o;
}

std::vector<std::int64_t> narrow(const IntegerVector& v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.fits_slong_p()) throw Error(ErrorKind::invariant_violation, "solution coordinate exceeds 64 bits");
        out.push_back(e.get_si());
    }
    return out;
}

}  // namespace

SolverPlan plan(const NullspaceBasis& basis) {
    require_planable(basis);
    Integer max_abs = 0;
    for (const auto& r : basis.vectors)
        for (const auto& e : r) max_abs = std::max<Integer>(max_abs, abs(e));
    SolverPlan p;
    p.max_entry_plus_one = max_abs + 1;
    p.gap_dim = static_cast<std::int64_t>(basis.dimension()) - 1;
    const Integer volume = 2 * p.max_entry_plus_one - 1;
    p.volume_each = saturating(volume);
    Integer required;
    mpz_pow_ui(required.get_mpz_t(), volume.get_mpz_t(), static_cast<unsigned long>(p.gap_dim));
    p.required_ap_length = saturating(required);
    return p;
}

std::int64_t required_ap_length(const NullspaceBasis& basis, GapSizing sizing) {
    if (sizing == GapSizing::full) return plan(basis).required_ap_length;
    require_planable(basis);
    const auto o = compact_offsets(basis);
    const auto [lo, hi] = std::minmax_element(o.begin(), o.end());
    return saturating(*hi - *lo + 1);
}

ApSolution construct_solution(const NullspaceBasis& basis, const ArithmeticProgression& ap, GapSizing sizing) {
    const std::int64_t need = required_ap_length(basis, sizing);
    if (ap.length() < need)
        throw Error(ErrorKind::ap_too_short, "AP too short: length " + std::to_string(ap.length()) +
                                                 " < required " + std::to_string(need));
    const std::size_t d = basis.dimension();
    const std::size_t n = basis.ambient_dim;
    Integer center;
    std::vector<std::int64_t> steps;
    if (sizing == GapSizing::full) {
        const SolverPlan p = plan(basis);
        const std::vector<std::int64_t> volumes(static_cast<std::size_t>(p.gap_dim), p.volume_each);
        const CenteredGAP gap = to_centered(embed_gap_in_ap(ap, volumes));
        center = static_cast<long>(gap.center);
        steps = gap.steps;
    } else {
        const auto o = compact_offsets(basis);
        const Integer lo = *std::min_element(o.begin(), o.end());
        center = Integer(static_cast<long>(ap.base())) - lo * static_cast<long>(ap.step());
        steps.assign(d - 1, ap.step());
    }

    IntegerVector x(n, center);
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) x[j] += static_cast<long>(steps[i - 1]) * basis.vectors[i][j];

    ApSolution s{narrow(x), ap, center, std::move(steps)};
    const bool inside = std::all_of(s.x.begin(), s.x.end(), [&](std::int64_t v) { return ap_contains(ap, v); });
    const auto [lo, hi] = std::minmax_element(s.x.begin(), s.x.end());
    if (!inside || *lo == *hi)
        throw Error(ErrorKind::invariant_violation, "constructed solution left its witness AP or is constant");
    return s;
}

bool verify_ap_constrained(const IntegerMatrix& m, std::span<const std::int64_t> x, const ArithmeticProgression& ap) {
    if (x.size() != m.cols()) return false;
    for (std::int64_t v : x)
        if (v < 0 || !ap_contains(ap, v)) return false;
    if (std::all_of(x.begin(), x.end(), [&](std::int64_t v) { return v == x.front(); })) return false;
    const auto mx = m.apply(x);
    return std::all_of(mx.begin(), mx.end(), [](const Integer& e) { return e == 0; });
}

bool verify_solution(const IntegerMatrix& m, const ApSolution& s) {
    return verify_ap_constrained(m, s.x, s.witness_ap);
}

SolutionStream solution_stream(const IntegerMatrix& m, const SetSource& source, std::int64_t count,
                               std::int64_t search_bound, SolverOptions options) {
    if (!is_null_diagonal(m))
        throw Error(ErrorKind::not_null_diagonal, "not null-diagonal: need every row sum 0 and nullspace dimension >= 2");
    SolutionStream out;
    out.basis = integer_nullspace_basis(m, true);
    out.required_ap_length = required_ap_length(out.basis, options.sizing);
    out.search_bound = search_bound;

    ApCursor cursor(source, out.required_ap_length, search_bound);
    std::set<std::vector<std::int64_t>> seen;
    while (static_cast<std::int64_t>(out.solutions.size()) < count) {
        auto ap = cursor.next();
        if (!ap) {
            out.exhausted = true;
            break;
        }
        ++out.aps_consumed;
        ApSolution s = construct_solution(out.basis, *ap, options.sizing);
        if (!verify_solution(m, s)) throw Error(ErrorKind::invariant_violation, "constructed solution failed verification");
        if (!seen.insert(s.x).second) {
            ++out.duplicates_skipped;
            continue;
        }
        out.solutions.push_back(std::move(s));
    }
    return out;
}

IntegerMatrix average_matrix(std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
    IntegerVector row(static_cast<std::size_t>(n), Integer(1));
    row.emplace_back(-static_cast<long>(n));
    return IntegerMatrix({row});
}

std::vector<AverageTuple> average_tuples(const SetSource& source, std::int64_t n, std::int64_t count,
                                         std::int64_t search_bound, SolverOptions options) {
    if (n < 2)
        throw Error(ErrorKind::invalid_argument,
                    "n must be >= 2 (n = 1 is the trivial identity x_1 / 1 = x_1)");
    const auto stream = solution_stream(average_matrix(n), source, count, search_bound, options);
    std::vector<AverageTuple> out;
    out.reserve(stream.solutions.size());
    for (const auto& s : stream.solutions) {
        AverageTuple t{{s.x.begin(), s.x.end() - 1}, s.x.back(), s.witness_ap};
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace apsolve
