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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "apsolve/integer_matrix.hpp"

namespace apsolve {

/// Integer spanning set r_1, ..., r_d of N(M). When `ones_first` is set,
/// r_1 is exactly (1, ..., 1).
struct NullspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<IntegerVector> vectors;
    bool ones_first = false;

    std::size_t dimension() const noexcept { return vectors.size(); }

    friend bool operator==(const NullspaceBasis&, const NullspaceBasis&) = default;
};

/// Result of fraction-free elimination: an integer row echelon form together
/// with the pivot column of each nonzero row.
struct EchelonForm {
    std::vector<IntegerVector> rows;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

EchelonForm bareiss_echelon(const std::vector<IntegerVector>& rows, std::size_t cols);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const std::vector<IntegerVector>& vectors);
std::size_t nullspace_dimension(const IntegerMatrix& m);

IntegerVector row_sums(const IntegerMatrix& m);
bool contains_ones_vector(const IntegerMatrix& m);
bool is_null_diagonal(const IntegerMatrix& m);

/// Integer basis of N(M). Each vector is primitive (content 1) with its first
/// nonzero entry positive. With `ones_first`, r_1 = (1, ..., 1) and the
/// remaining vectors are shifted by multiples of r_1 so that their entries
/// are as close to symmetric about zero as integers allow.
///
/// Throws Error(not_null_diagonal) if `ones_first` is requested for a matrix
/// that is not null-diagonal.
NullspaceBasis integer_nullspace_basis(const IntegerMatrix& m, bool ones_first);

/// Exact coefficients c with sum_i c_i * vectors[i] = target, if any.
std::optional<std::vector<Rational>> span_coefficients(
    const std::vector<IntegerVector>& vectors, std::span<const Integer> target);

/// Divides by the content and makes the first nonzero entry positive.
IntegerVector normalize_primitive(IntegerVector v);

}  // namespace apsolve
