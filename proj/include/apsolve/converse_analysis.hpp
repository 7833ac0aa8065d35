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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apsolve/ap_solver.hpp"
#include "apsolve/integer_matrix.hpp"
#include "apsolve/progressions.hpp"
#include "apsolve/set_sources.hpp"

namespace apsolve {

struct ViolatingRow {
    std::size_t row = 0;  // zero-based
    Integer abs_sum;      // C = sum_j |a_ij|
};

/// Least row with a nonzero sum, if any.
std::optional<ViolatingRow> violating_row(const IntegerMatrix& m);

struct ConstrainedSolution {
    std::vector<std::int64_t> x;
    ArithmeticProgression witness_ap;
};

struct EnumerationReport {
    ViolatingRow violating;
    std::int64_t k = 0;
    std::int64_t base_bound = 0;  // C * k
    std::int64_t step_bound = 0;  // C * k
    std::int64_t search_bound = 0;
    /// Sorted by x; one entry per distinct x, witnessed by the least (b, d).
    std::vector<ConstrainedSolution> solutions;
    std::vector<ConstrainedSolution> brute_force_solutions;
    bool brute_force_agreement = false;

    // Search-space accounting: every (b, d) in [0, Ck] x [1, Ck] is a
    // candidate; each accounts for k^n lambda assignments, either evaluated
    // or discarded by a filter or a pruned subtree.
    std::int64_t candidate_aps = 0;
    std::int64_t admissible_aps = 0;
    Integer lambda_assignments_covered;
    Integer lambda_assignments_evaluated;

    /// Every AP of length k in source within the search bound has coprime
    /// base and step. The bound derivation needs this; without it the
    /// agreement check is informative only.
    bool source_prime_like = false;
    /// Largest element of any bounded candidate AP fits inside search_bound,
    /// so the brute force can see everything the bounded pass can.
    bool bounded_region_covered = false;
};

/// Throws Error(not_applicable) if every row sum is zero and
/// Error(invalid_argument) if k < 3.
EnumerationReport enumerate_constrained_solutions(const IntegerMatrix& m, std::int64_t k,
                                                  const SetSource& source, std::int64_t search_bound);

/// All non-constant x with Mx = 0 whose coordinates lie in one AP of length
/// k inside the source, elements <= search_bound. Plain nested loops, no
/// pruning; serves as the oracle for the bounded enumeration.
std::vector<ConstrainedSolution> brute_force_ap_solutions(const IntegerMatrix& m, std::int64_t k,
                                                          const SetSource& source,
                                                          std::int64_t search_bound);

enum class Verdict { infinite_family, finite, degenerate };

const char* to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::degenerate;
    std::optional<SolutionStream> samples;
    std::optional<EnumerationReport> report;
    /// For the degenerate verdict: non-constant solutions found by brute
    /// force within the bound (always expected to be zero).
    std::int64_t degenerate_counterexamples = 0;
};

Classification classify_matrix(const IntegerMatrix& m, std::int64_t k, const SetSource& source,
                               std::int64_t search_bound, std::int64_t sample_count);

}  // namespace apsolve
