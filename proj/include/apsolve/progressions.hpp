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

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace apsolve {

/// { base + i * step | 0 <= i < length } with length >= 1, base >= 0, step >= 1.
class ArithmeticProgression {
public:
    /// Throws Error(invalid_argument) if the parameters are out of range or
    /// the last element does not fit in 64 bits.
    ArithmeticProgression(std::int64_t length, std::int64_t base, std::int64_t step);

    std::int64_t length() const noexcept { return length_; }
    std::int64_t base() const noexcept { return base_; }
    std::int64_t step() const noexcept { return step_; }

    std::int64_t element(std::int64_t index) const noexcept { return base_ + index * step_; }
    std::int64_t last() const noexcept { return element(length_ - 1); }

    friend auto operator<=>(const ArithmeticProgression&, const ArithmeticProgression&) = default;

private:
    std::int64_t length_;
    std::int64_t base_;
    std::int64_t step_;
};

std::vector<std::int64_t> ap_elements(const ArithmeticProgression& ap);
bool ap_contains(const ArithmeticProgression& ap, std::int64_t x);

/// { base + n_1 b_1 + ... + n_d b_d | 0 <= n_i < N_i }.
struct GeneralizedAP {
    std::int64_t base = 0;
    std::vector<std::int64_t> steps;
    std::vector<std::int64_t> volumes;

    std::size_t dimension() const noexcept { return steps.size(); }
};

/// Centered form { center + sum n_i b_i | -N_i < n_i < N_i }.
struct CenteredGAP {
    std::int64_t center = 0;
    std::vector<std::int64_t> steps;
    std::vector<std::int64_t> half_widths;
};

struct GapExpansion {
    std::vector<std::int64_t> values;  // sorted, distinct
    bool had_duplicates = false;
};

/// Throws Error(invalid_argument) when the GAP parameters are malformed.
void validate(const GeneralizedAP& g);

GapExpansion gap_elements(const GeneralizedAP& g);
GapExpansion centered_elements(const CenteredGAP& g);

/// Requires every volume to be odd; throws Error(volume_not_odd) otherwise.
CenteredGAP to_centered(const GeneralizedAP& g);

/// Mixed-radix embedding: steps b_i = ap.step * prod_{j<i} volumes_j.
/// Throws Error(ap_too_short) if ap.length < prod volumes.
GeneralizedAP embed_gap_in_ap(const ArithmeticProgression& ap, std::span<const std::int64_t> volumes);

/// Product of the volumes, saturating at INT64_MAX.
std::int64_t volume_product(std::span<const std::int64_t> volumes) noexcept;

}  // namespace apsolve
