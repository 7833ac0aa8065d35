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
#include <span>
#include <string>
#include <vector>

#include "apsolve/ap_solver.hpp"
#include "apsolve/integer_matrix.hpp"
#include "apsolve/progressions.hpp"
#include "apsolve/set_sources.hpp"

namespace apsolve {

/// (n - 2) x n second-difference matrix; its nullspace is spanned by
/// (1, ..., 1) and (0, 1, ..., n - 1). Rejects n < 3.
IntegerMatrix progression_matrix(std::int64_t n);

/// Recovers the AP traced by a progression-matrix solution, reversing it if
/// it decreases.
ArithmeticProgression extract_ap(std::span<const std::int64_t> x);

struct EquivalenceDemo {
    SolutionStream stream;
    std::vector<ArithmeticProgression> aps;
};

EquivalenceDemo zero_solution_to_ap_demo(const SetSource& source, std::int64_t n, std::int64_t count,
                                         std::int64_t search_bound,
                                         SolverOptions options = {GapSizing::compact});

struct ReciprocalSum {
    Rational value;
    std::int64_t terms = 0;
    bool skipped_zero = false;
};

/// Exact sum of 1/a over source members 1 <= a <= bound.
ReciprocalSum erdos_turan_partial_sum(const SetSource& source, std::int64_t bound);

/// Truncated (not rounded) decimal expansion with `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);

}  // namespace apsolve
