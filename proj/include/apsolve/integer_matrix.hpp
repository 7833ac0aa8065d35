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
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace apsolve {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;

/// Exact m x n matrix of arbitrary-precision integers. Immutable once built.
class IntegerMatrix {
public:
    /// Throws Error(invalid_argument) on an empty or ragged row list.
    explicit IntegerMatrix(std::vector<IntegerVector> rows);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Integer& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    std::span<const Integer> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }

    /// M * x, exact.
    IntegerVector apply(std::span<const Integer> x) const;
    IntegerVector apply(std::span<const std::int64_t> x) const;

    std::vector<IntegerVector> to_rows() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Reads the text format: a header line `m n`, then m rows of n signed
/// decimal integers. Lines whose first non-blank character is `#` are ignored.
IntegerMatrix parse_matrix(std::istream& in);
IntegerMatrix parse_matrix_text(const std::string& text);

/// Parses a bracketed literal such as `[[1,1,-2],[0,1,-1]]`.
IntegerMatrix parse_matrix_literal(const std::string& literal);

std::string format_matrix(const IntegerMatrix& m);

}  // namespace apsolve
