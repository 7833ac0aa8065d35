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
#include <utility>
#include <vector>

#include "apsolve/exact_linalg.hpp"
#include "apsolve/integer_matrix.hpp"
#include "apsolve/progressions.hpp"
#include "apsolve/set_sources.hpp"

namespace apsolve {

/// A solution of Mx = 0 whose coordinates all lie in one AP of the source.
/// x = center * r_1 + steps_1 * r_2 + ... + steps_{d-1} * r_d.
struct ApSolution {
    std::vector<std::int64_t> x;
    ArithmeticProgression witness_ap;
    Integer center;
    std::vector<std::int64_t> steps;
};

/// How large a GAP the construction carves out of each witness AP.
enum class GapSizing {
    /// N = max |r_ij| + 1 and a GAP of volume (2N - 1) in each of d - 1
    /// dimensions, centered on a'.
    full,
    /// All GAP steps equal to the AP step, so coordinates sit at offsets
    /// sum_{i>=2} r_i from the base; the AP only has to span those offsets.
    compact,
};

struct SolverPlan {
    Integer max_entry_plus_one;  // N
    std::int64_t gap_dim = 0;
    std::int64_t volume_each = 0;
    std::int64_t required_ap_length = 0;
};

/// Throws Error(invalid_argument) if the basis is not ones-first or d < 2.
SolverPlan plan(const NullspaceBasis& basis);

/// Witness AP length needed by the construction under the given sizing.
std::int64_t required_ap_length(const NullspaceBasis& basis, GapSizing sizing);

/// Throws Error(ap_too_short) if ap is shorter than the plan requires.
ApSolution construct_solution(const NullspaceBasis& basis, const ArithmeticProgression& ap,
                              GapSizing sizing = GapSizing::full);

bool verify_solution(const IntegerMatrix& m, const ApSolution& s);

/// Checks M x = 0, x not constant, x_i >= 0 and every x_i in `ap`.
bool verify_ap_constrained(const IntegerMatrix& m, std::span<const std::int64_t> x,
                           const ArithmeticProgression& ap);

struct SolverOptions {
    GapSizing sizing = GapSizing::full;
};

struct SolutionStream {
    NullspaceBasis basis;
    std::int64_t required_ap_length = 0;
    std::vector<ApSolution> solutions;
    std::int64_t aps_consumed = 0;
    std::int64_t duplicates_skipped = 0;
    /// True if the search bound ran out before `count` solutions were found.
    bool exhausted = false;
    std::int64_t search_bound = 0;
};

/// Throws Error(not_null_diagonal) if M is not null-diagonal.
SolutionStream solution_stream(const IntegerMatrix& m, const SetSource& source, std::int64_t count,
                               std::int64_t search_bound, SolverOptions options = {});

struct AverageTuple {
    std::vector<std::int64_t> tuple;
    std::int64_t average = 0;
    ArithmeticProgression witness_ap;
};

/// The row matrix [1, ..., 1, -n] with n ones.
IntegerMatrix average_matrix(std::int64_t n);

/// Tuples of n source members, not all equal, whose mean is a member too.
/// n = 1 is the trivial identity and is rejected with Error(invalid_argument).
std::vector<AverageTuple> average_tuples(const SetSource& source, std::int64_t n, std::int64_t count,
                                         std::int64_t search_bound,
                                         SolverOptions options = {GapSizing::compact});

}  // namespace apsolve
