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

#include "apsolve/converse_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "apsolve/error.hpp"
#include "apsolve/exact_linalg.hpp"

namespace apsolve {

namespace {

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

SmallMatrix narrow_matrix(const IntegerMatrix& m) {
    SmallMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_sint_p())
                throw Error(ErrorKind::invalid_argument, "matrix entries too large for AP enumeration");
            out[i][j] = m(i, j).get_si();
        }
    return out;
}

bool annihilates(const SmallMatrix& a, const std::vector<std::int64_t>& x) {
    for (const auto& row : a) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < row.size(); ++j) acc += static_cast<__int128>(row[j]) * x[j];
        if (acc != 0) return false;
    }
    return true;
}

bool constant(const std::vector<std::int64_t>& x) {
    return std::all_of(x.begin(), x.end(), [&](std::int64_t v) { return v == x.front(); });
}

Integer power(std::int64_t base, std::size_t exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

// Depth-first walk over lambda in [0, k)^n solving A lambda = target, with
// per-row interval pruning on the partial sums.
class LambdaSearch {
public:
    LambdaSearch(const SmallMatrix& a, std::int64_t k) : a_(a), k_(k), n_(a.front().size()) {
        lo_.assign(a.size(), std::vector<std::int64_t>(n_ + 1, 0));
        hi_ = lo_;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t l = n_; l-- > 0;) {
                lo_[i][l] = lo_[i][l + 1] + std::min<std::int64_t>(0, a[i][l]) * (k - 1);
                hi_[i][l] = hi_[i][l + 1] + std::max<std::int64_t>(0, a[i][l]) * (k - 1);
            }
        subtree_.resize(n_ + 1);
        for (std::size_t l = 0; l <= n_; ++l) subtree_[l] = power(k, n_ - l);
    }

    template <class F>
    void run(const std::vector<std::int64_t>& target, Integer& covered, Integer& evaluated, F&& on_leaf) {
        std::vector<std::int64_t> partial(a_.size(), 0), lambda(n_, 0);
        walk(0, target, partial, lambda, covered, evaluated, on_leaf);
    }

private:
    template <class F>
    void walk(std::size_t l, const std::vector<std::int64_t>& target, std::vector<std::int64_t>& partial,
              std::vector<std::int64_t>& lambda, Integer& covered, Integer& evaluated, F& on_leaf) {
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const std::int64_t rest = target[i] - partial[i];
            if (rest < lo_[i][l] || rest > hi_[i][l]) {
                covered += subtree_[l];
                return;
            }
        }
        if (l == n_) {
            covered += 1;
            evaluated += 1;
            on_leaf(lambda);
            return;
        }
        for (std::int64_t v = 0; v < k_; ++v) {
            lambda[l] = v;
            for (std::size_t i = 0; i < a_.size(); ++i) partial[i] += a_[i][l] * v;
            walk(l + 1, target, partial, lambda, covered, evaluated, on_leaf);
            for (std::size_t i = 0; i < a_.size(); ++i) partial[i] -= a_[i][l] * v;
        }
    }

    const SmallMatrix& a_;
    std::int64_t k_;
    std::size_t n_;
    std::vector<std::vector<std::int64_t>> lo_, hi_;
    std::vector<Integer> subtree_;
};

std::vector<ConstrainedSolution> flatten(std::map<std::vector<std::int64_t>, ArithmeticProgression>& found) {
    std::vector<ConstrainedSolution> out;
    out.reserve(found.size());
    for (auto& [x, ap] : found) out.push_back({x, ap});
    return out;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::infinite_family: return "infinite family";
        case Verdict::finite: return "finite";
        case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

std::optional<ViolatingRow> violating_row(const IntegerMatrix& m) {
    const auto sums = row_sums(m);
    for (std::size_t i = 0; i < sums.size(); ++i) {
        if (sums[i] == 0) continue;
        Integer c = 0;
        for (const auto& e : m.row(i)) c += abs(e);
        return ViolatingRow{i, c};
    }
    return std::nullopt;
}

std::vector<ConstrainedSolution> brute_force_ap_solutions(const IntegerMatrix& m, std::int64_t k,
                                                          const SetSource& source, std::int64_t search_bound) {
    if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be >= 1");
    const SmallMatrix a = narrow_matrix(m);
    const std::size_t n = m.cols();
    std::map<std::vector<std::int64_t>, ArithmeticProgression> found;
    std::vector<std::int64_t> lambda(n), x(n);
    ApCursor cursor(source, k, search_bound);
    while (auto ap = cursor.next()) {
        std::fill(lambda.begin(), lambda.end(), 0);
        for (;;) {
            for (std::size_t l = 0; l < n; ++l) x[l] = ap->element(lambda[l]);
            if (!constant(x) && annihilates(a, x)) found.emplace(x, *ap);
            std::size_t l = 0;
            while (l < n && ++lambda[l] == k) lambda[l++] = 0;
            if (l == n) break;
        }
    }
    return flatten(found);
}

EnumerationReport enumerate_constrained_solutions(const IntegerMatrix& m, std::int64_t k, const SetSource& source,
                                                  std::int64_t search_bound) {
    if (k < 3) throw Error(ErrorKind::invalid_argument, "k < 3: prime-likeness is only defined for k >= 3");
    const auto vr = violating_row(m);
    if (!vr)
        throw Error(ErrorKind::not_applicable, "matrix is null-diagonal-summed: every row sum is zero");
    const Integer ck = vr->abs_sum * static_cast<long>(k);
    if (!ck.fits_sint_p()) throw Error(ErrorKind::invalid_argument, "C * k too large to enumerate");

    EnumerationReport rep;
    rep.violating = *vr;
    rep.k = k;
    rep.base_bound = rep.step_bound = ck.get_si();
    rep.search_bound = search_bound;

    const SmallMatrix a = narrow_matrix(m);
    const std::size_t n = m.cols();
    std::vector<std::int64_t> sums(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) sums[i] = std::accumulate(a[i].begin(), a[i].end(), std::int64_t{0});

    const Integer per_candidate = power(k, n);
    LambdaSearch search(a, k);
    std::map<std::vector<std::int64_t>, ArithmeticProgression> found;
    std::vector<std::int64_t> target(a.size()), x(n);
    for (std::int64_t b = 0; b <= rep.base_bound; ++b) {
        for (std::int64_t d = 1; d <= rep.step_bound; ++d) {
            ++rep.candidate_aps;
            const ArithmeticProgression ap(k, b, d);
            bool admissible = std::gcd(b, d) == 1;
            for (std::int64_t i = 0; admissible && i < k; ++i) admissible = source.contains(ap.element(i));
            // M x = b * rowsum + d * (A lambda), so each row needs
            // A_i lambda = -b * rowsum_i / d exactly.
            for (std::size_t i = 0; admissible && i < a.size(); ++i) {
                const std::int64_t num = -b * sums[i];
                admissible = num % d == 0;
                target[i] = num / d;
            }
            if (!admissible) {
                rep.lambda_assignments_covered += per_candidate;
                continue;
            }
            ++rep.admissible_aps;
            search.run(target, rep.lambda_assignments_covered, rep.lambda_assignments_evaluated,
                       [&](const std::vector<std::int64_t>& lambda) {
                           for (std::size_t l = 0; l < n; ++l) x[l] = ap.element(lambda[l]);
                           if (!constant(x)) found.emplace(x, ap);
                       });
        }
    }
    rep.solutions = flatten(found);
    rep.brute_force_solutions = brute_force_ap_solutions(m, k, source, search_bound);
    rep.brute_force_agreement =
        std::equal(rep.solutions.begin(), rep.solutions.end(), rep.brute_force_solutions.begin(),
                   rep.brute_force_solutions.end(), [](const auto& l, const auto& r) { return l.x == r.x; });
    rep.source_prime_like = audit_prime_like(source, k, search_bound).sub_ap_violations.empty();
    rep.bounded_region_covered = rep.base_bound + (k - 1) * rep.step_bound <= search_bound;

    for (const auto& s : rep.solutions)
        if (!verify_ap_constrained(m, s.x, s.witness_ap) || std::gcd(s.witness_ap.base(), s.witness_ap.step()) != 1)
            throw Error(ErrorKind::invariant_violation, "bounded enumeration produced an invalid solution");
    return rep;
}

Classification classify_matrix(const IntegerMatrix& m, std::int64_t k, const SetSource& source,
                               std::int64_t search_bound, std::int64_t sample_count) {
    if (k < 3) throw Error(ErrorKind::invalid_argument, "k must be >= 3");
    Classification c;
    if (is_null_diagonal(m)) {
        c.verdict = Verdict::infinite_family;
        c.samples = solution_stream(m, source, sample_count, search_bound);
    } else if (violating_row(m)) {
        c.verdict = Verdict::finite;
        c.report = enumerate_constrained_solutions(m, k, source, search_bound);
    } else {
        // Row sums vanish but N(M) is spanned by (1, ..., 1): only constant
        // vectors solve.
        c.verdict = Verdict::degenerate;
        c.degenerate_counterexamples =
            static_cast<std::int64_t>(brute_force_ap_solutions(m, k, source, search_bound).size());
    }
    return c;
}

}  // namespace apsolve
