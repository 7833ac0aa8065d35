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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apsolve/progressions.hpp"

namespace apsolve {

/// A subset of the naturals with membership and bounded enumeration.
///
/// Implementations are immutable up to known_bound(), so concurrent read-only
/// queries are safe. PrimeSource with BeyondBound::extend mutates itself on
/// out-of-range queries and must then be used from a single thread.
class SetSource {
public:
    virtual ~SetSource() = default;

    virtual std::string name() const = 0;
    virtual bool contains(std::int64_t x) const = 0;
    /// Members <= bound, strictly increasing.
    virtual std::vector<std::int64_t> enumerate_up_to(std::int64_t bound) const = 0;
    virtual std::int64_t known_bound() const = 0;
};

using SourcePtr = std::shared_ptr<const SetSource>;

enum class BeyondBound { error, extend };

/// The primes, materialized by a segmented sieve of Eratosthenes.
class PrimeSource final : public SetSource {
public:
    explicit PrimeSource(std::int64_t bound, BeyondBound policy = BeyondBound::error);

    std::string name() const override { return "primes"; }
    bool contains(std::int64_t x) const override;
    std::vector<std::int64_t> enumerate_up_to(std::int64_t bound) const override;
    std::int64_t known_bound() const override { return bound_; }

    /// Sieves up to `bound` if not already covered. Not thread-safe.
    void extend_to(std::int64_t bound) const;

    /// Raw bitmap over odd numbers: bit i set iff 2i+1 is prime.
    const std::vector<std::uint64_t>& odd_bitmap() const noexcept { return odd_bits_; }

    /// Loads a previously saved bitmap for exactly this bound from `dir`, or
    /// sieves and saves it there. Falls back to sieving on any I/O problem.
    static std::shared_ptr<PrimeSource> cached(std::int64_t bound, const std::filesystem::path& dir,
                                               BeyondBound policy = BeyondBound::error);

private:
    PrimeSource(std::int64_t bound, std::vector<std::uint64_t> bits, BeyondBound policy);

    BeyondBound policy_ = BeyondBound::error;
    mutable std::int64_t bound_ = 0;
    mutable std::vector<std::uint64_t> odd_bits_;
};

/// Finite set read from a file or given explicitly.
class ListSource final : public SetSource {
public:
    /// Members must be non-negative and strictly increasing.
    ListSource(std::string name, std::vector<std::int64_t> members);

    std::string name() const override { return name_; }
    bool contains(std::int64_t x) const override;
    std::vector<std::int64_t> enumerate_up_to(std::int64_t bound) const override;
    std::int64_t known_bound() const override;

    const std::vector<std::int64_t>& members() const noexcept { return members_; }

private:
    std::string name_;
    std::vector<std::int64_t> members_;
};

/// { offset + i * modulus | i >= 0 } restricted to values >= 0. modulus 1 and
/// offset 0 give the naturals.
class ResidueSource final : public SetSource {
public:
    ResidueSource(std::int64_t modulus, std::int64_t offset, std::int64_t nominal_bound);

    std::string name() const override;
    bool contains(std::int64_t x) const override;
    std::vector<std::int64_t> enumerate_up_to(std::int64_t bound) const override;
    std::int64_t known_bound() const override { return nominal_bound_; }

private:
    std::int64_t modulus_;
    std::int64_t offset_;
    std::int64_t nominal_bound_;
};

std::shared_ptr<PrimeSource> primes_source(std::int64_t bound, BeyondBound policy = BeyondBound::error);
std::shared_ptr<ListSource> file_source(const std::filesystem::path& path);
std::shared_ptr<ListSource> parse_set_text(std::string name, std::string_view text);
std::shared_ptr<ResidueSource> naturals_source(std::int64_t nominal_bound);
std::shared_ptr<ResidueSource> multiples_source(std::int64_t modulus, std::int64_t nominal_bound);

/// Members of a source up to a bound, with O(1) membership for the search loops.
class MembershipIndex {
public:
    MembershipIndex(const SetSource& source, std::int64_t bound);

    std::int64_t bound() const noexcept { return bound_; }
    const std::vector<std::int64_t>& members() const noexcept { return members_; }
    bool contains(std::int64_t x) const noexcept {
        return x >= 0 && x <= bound_ && bits_[x >> 6] >> (x & 63) & 1U;
    }
    bool contains(const ArithmeticProgression& ap) const noexcept;

private:
    std::int64_t bound_;
    std::vector<std::int64_t> members_;
    std::vector<std::uint64_t> bits_;
};

struct ApSearchResult {
    std::optional<ArithmeticProgression> ap;
    std::int64_t search_bound = 0;

    bool found() const noexcept { return ap.has_value(); }
};

struct ApKey {
    std::int64_t base;
    std::int64_t step;

    friend auto operator<=>(const ApKey&, const ApKey&) = default;
};

/// Streams the APs of a fixed length inside a source, in lexicographic
/// (base, step) order, with every element <= the search bound.
class ApCursor {
public:
    ApCursor(const SetSource& source, std::int64_t length, std::int64_t search_bound);
    ApCursor(std::shared_ptr<const MembershipIndex> index, std::int64_t length);

    /// Least qualifying AP with key strictly greater than `after`, or the
    /// least overall when `after` is empty. Does not move the cursor.
    std::optional<ArithmeticProgression> find_after(std::optional<ApKey> after) const;

    /// Advances to the next AP; empty once the bound is exhausted.
    std::optional<ArithmeticProgression> next();

    const MembershipIndex& index() const noexcept { return *index_; }
    std::int64_t length() const noexcept { return length_; }

private:
    std::shared_ptr<const MembershipIndex> index_;
    std::int64_t length_;
    std::optional<ApKey> last_;
    bool exhausted_ = false;
};

ApSearchResult find_ap(const SetSource& source, std::int64_t k, std::int64_t search_bound);
ApSearchResult find_next_ap(const SetSource& source, std::int64_t k, std::int64_t search_bound, ApKey after);

struct PrimeLikeAudit {
    std::int64_t k_max = 0;
    std::int64_t search_bound = 0;
    /// Maximal APs: not extendable inside the bound at either end. Reported
    /// with their length capped at k_max.
    std::int64_t maximal_checked = 0;
    std::vector<ArithmeticProgression> violations;
    /// Maximal APs whose step is odd.
    std::vector<ArithmeticProgression> odd_steps;
    /// Every (base, step) pair starting an AP of length >= 3, maximal or not.
    std::int64_t sub_aps_checked = 0;
    std::vector<ArithmeticProgression> sub_ap_violations;

    bool prime_like() const noexcept { return violations.empty() && sub_ap_violations.empty(); }
};

/// Reports every AP of length in [3, k_max] inside the source (elements <=
/// search_bound) whose base and step are not coprime.
PrimeLikeAudit audit_prime_like(const SetSource& source, std::int64_t k_max, std::int64_t search_bound);

}  // namespace apsolve
