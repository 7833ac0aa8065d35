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

#include "apsolve/set_sources.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "apsolve/error.hpp"

namespace apsolve {

namespace {

constexpr std::int64_t kSegmentOdds = std::int64_t{1} << 18;
constexpr char kCacheMagic[8] = {'A', 'P', 'S', 'V', 'P', 'R', '0', '1'};

inline void clear_bit(std::vector<std::uint64_t>& bits, std::int64_t i) {
    bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline bool test_bit(const std::vector<std::uint64_t>& bits, std::int64_t i) {
    return bits[i >> 6] >> (i & 63) & 1U;
}

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::int64_t> small_odd_primes(std::int64_t limit) {
    std::vector<char> composite(static_cast<std::size_t>(limit + 1), 0);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 3; p <= limit; p += 2) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::int64_t q = p * p; q <= limit; q += 2 * p) composite[q] = 1;
    }
    return out;
}

// Sieves odd indices [from, to) of a bitmap where index i stands for 2i + 1.
// Bits in that range must already be set.
void sieve_odd_range(std::vector<std::uint64_t>& bits, std::int64_t from, std::int64_t to) {
    if (from >= to) return;
    const std::int64_t top_value = 2 * (to - 1) + 1;
    const auto base = small_odd_primes(isqrt(top_value));
    if (from == 0) clear_bit(bits, 0);  // 1 is not prime
    for (std::int64_t seg = from; seg < to; seg += kSegmentOdds) {
        const std::int64_t seg_end = std::min(to, seg + kSegmentOdds);
        const std::int64_t lo_value = 2 * seg + 1;
        const std::int64_t hi_value = 2 * (seg_end - 1) + 1;
        for (std::int64_t p : base) {
            if (p * p > hi_value) break;
            std::int64_t start = std::max(p * p, (lo_value + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            for (std::int64_t v = start; v <= hi_value; v += 2 * p) clear_bit(bits, (v - 1) / 2);
        }
    }
}

std::int64_t odd_count(std::int64_t bound) { return bound < 1 ? 0 : (bound + 1) / 2; }

void set_range(std::vector<std::uint64_t>& bits, std::int64_t from, std::int64_t to) {
    for (std::int64_t i = from; i < to; ++i) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
}

std::vector<std::uint64_t> sieve_bitmap(std::int64_t bound) {
    const std::int64_t count = odd_count(bound);
    std::vector<std::uint64_t> bits(static_cast<std::size_t>((count + 63) / 64), 0);
    set_range(bits, 0, count);
    sieve_odd_range(bits, 0, count);
    return bits;
}

}  // namespace

// --- PrimeSource -----------------------------------------------------------

PrimeSource::PrimeSource(std::int64_t bound, BeyondBound policy) : policy_(policy), bound_(bound) {
    if (bound < 2) throw Error(ErrorKind::invalid_argument, "primes source needs bound >= 2");
    odd_bits_ = sieve_bitmap(bound);
}

PrimeSource::PrimeSource(std::int64_t bound, std::vector<std::uint64_t> bits, BeyondBound policy)
    : policy_(policy), bound_(bound), odd_bits_(std::move(bits)) {}

void PrimeSource::extend_to(std::int64_t bound) const {
    if (bound <= bound_) return;
    const std::int64_t old_count = odd_count(bound_);
    const std::int64_t new_count = odd_count(bound);
    odd_bits_.resize(static_cast<std::size_t>((new_count + 63) / 64), 0);
    set_range(odd_bits_, old_count, new_count);
    sieve_odd_range(odd_bits_, old_count, new_count);
    bound_ = bound;
}

bool PrimeSource::contains(std::int64_t x) const {
    if (x > bound_) {
        if (policy_ == BeyondBound::error)
            throw Error(ErrorKind::beyond_bound, "beyond bound: " + std::to_string(x) + " > sieve bound " +
                                                     std::to_string(bound_));
        extend_to(std::max(x, 2 * bound_));
    }
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    return test_bit(odd_bits_, (x - 1) / 2);
}

std::vector<std::int64_t> PrimeSource::enumerate_up_to(std::int64_t bound) const {
    if (bound > bound_) {
        if (policy_ == BeyondBound::error)
            throw Error(ErrorKind::beyond_bound, "beyond bound: enumeration to " + std::to_string(bound) +
                                                     " > sieve bound " + std::to_string(bound_));
        extend_to(bound);
    }
    std::vector<std::int64_t> out;
    if (bound >= 2) out.push_back(2);
    const std::int64_t count = odd_count(bound);
    for (std::int64_t w = 0; w * 64 < count; ++w) {
        std::uint64_t word = odd_bits_[w];
        while (word) {
            const std::int64_t i = w * 64 + __builtin_ctzll(word);
            word &= word - 1;
            if (i >= count) break;
            out.push_back(2 * i + 1);
        }
    }
    return out;
}

std::shared_ptr<PrimeSource> PrimeSource::cached(std::int64_t bound, const std::filesystem::path& dir,
                                                 BeyondBound policy) {
    const auto path = dir / ("primes-" + std::to_string(bound) + ".bin");
    const std::size_t words = static_cast<std::size_t>((odd_count(bound) + 63) / 64);
    if (std::ifstream in{path, std::ios::binary}) {
        char magic[8] = {};
        std::int64_t stored = 0;
        std::vector<std::uint64_t> bits(words);
        in.read(magic, sizeof magic);
        in.read(reinterpret_cast<char*>(&stored), sizeof stored);
        in.read(reinterpret_cast<char*>(bits.data()), static_cast<std::streamsize>(words * sizeof(std::uint64_t)));
        if (in && std::equal(magic, magic + 8, kCacheMagic) && stored == bound)
            return std::shared_ptr<PrimeSource>(new PrimeSource(bound, std::move(bits), policy));
    }
    auto source = std::make_shared<PrimeSource>(bound, policy);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (std::ofstream out{path, std::ios::binary}) {
        out.write(kCacheMagic, sizeof kCacheMagic);
        out.write(reinterpret_cast<const char*>(&bound), sizeof bound);
        out.write(reinterpret_cast<const char*>(source->odd_bits_.data()),
                  static_cast<std::streamsize>(words * sizeof(std::uint64_t)));
    }
    return source;
}

// --- ListSource ------------------------------------------------------------

ListSource::ListSource(std::string name, std::vector<std::int64_t> members)
    : name_(std::move(name)), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 0) throw Error(ErrorKind::invalid_argument, "set members must be non-negative");
        if (i > 0 && members_[i] <= members_[i - 1])
            throw Error(ErrorKind::invalid_argument, "set members must be strictly increasing");
    }
}

bool ListSource::contains(std::int64_t x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

std::vector<std::int64_t> ListSource::enumerate_up_to(std::int64_t bound) const {
    return {members_.begin(), std::upper_bound(members_.begin(), members_.end(), bound)};
}

std::int64_t ListSource::known_bound() const { return members_.empty() ? 0 : members_.back(); }

// --- ResidueSource ---------------------------------------------------------

ResidueSource::ResidueSource(std::int64_t modulus, std::int64_t offset, std::int64_t nominal_bound)
    : modulus_(modulus), offset_(0), nominal_bound_(nominal_bound) {
    if (modulus < 1) throw Error(ErrorKind::invalid_argument, "modulus must be >= 1");
    offset_ = ((offset % modulus) + modulus) % modulus;
}

std::string ResidueSource::name() const {
    if (modulus_ == 1) return "naturals";
    if (offset_ == 0) return "multiples:" + std::to_string(modulus_);
    return "residue:" + std::to_string(modulus_) + ":" + std::to_string(offset_);
}

bool ResidueSource::contains(std::int64_t x) const { return x >= 0 && x % modulus_ == offset_; }

std::vector<std::int64_t> ResidueSource::enumerate_up_to(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t v = offset_; v <= bound; v += modulus_) out.push_back(v);
    return out;
}

// --- factories -------------------------------------------------------------

std::shared_ptr<PrimeSource> primes_source(std::int64_t bound, BeyondBound policy) {
    return std::make_shared<PrimeSource>(bound, policy);
}

std::shared_ptr<ListSource> parse_set_text(std::string name, std::string_view text) {
    std::vector<std::int64_t> members;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        const bool digits = std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (!digits || token.size() > 18)
            throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": expected a non-negative integer, got '" +
                                              token + "'");
        const std::int64_t v = std::stoll(token);
        if (!members.empty() && v <= members.back())
            throw Error(ErrorKind::parse, "not increasing at line " + std::to_string(lineno));
        members.push_back(v);
    }
    return std::make_shared<ListSource>(std::move(name), std::move(members));
}

std::shared_ptr<ListSource> file_source(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::invalid_argument, "cannot open set file: " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_set_text("file:" + path.string(), text.str());
}

std::shared_ptr<ResidueSource> naturals_source(std::int64_t nominal_bound) {
    return std::make_shared<ResidueSource>(1, 0, nominal_bound);
}

std::shared_ptr<ResidueSource> multiples_source(std::int64_t modulus, std::int64_t nominal_bound) {
    return std::make_shared<ResidueSource>(modulus, 0, nominal_bound);
}

// --- searching -------------------------------------------------------------

MembershipIndex::MembershipIndex(const SetSource& source, std::int64_t bound)
    : bound_(std::max<std::int64_t>(bound, 0)),
      members_(source.enumerate_up_to(bound_)),
      bits_(static_cast<std::size_t>(bound_ / 64 + 1), 0) {
    for (std::int64_t x : members_) bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

bool MembershipIndex::contains(const ArithmeticProgression& ap) const noexcept {
    if (ap.last() > bound_) return false;
    for (std::int64_t i = 0; i < ap.length(); ++i)
        if (!contains(ap.element(i))) return false;
    return true;
}

ApCursor::ApCursor(const SetSource& source, std::int64_t length, std::int64_t search_bound)
    : ApCursor(std::make_shared<MembershipIndex>(source, search_bound), length) {}

ApCursor::ApCursor(std::shared_ptr<const MembershipIndex> index, std::int64_t length)
    : index_(std::move(index)), length_(length) {
    if (length < 1) throw Error(ErrorKind::invalid_argument, "AP length must be >= 1");
}

std::optional<ArithmeticProgression> ApCursor::find_after(std::optional<ApKey> after) const {
    const auto& mem = index_->members();
    const std::int64_t bound = index_->bound();
    auto it = after ? std::lower_bound(mem.begin(), mem.end(), after->base) : mem.begin();

    if (length_ == 1) {
        // Length-1 APs are keyed (a, 1).
        if (after && it != mem.end() && *it == after->base && after->step >= 1) ++it;
        if (it == mem.end()) return std::nullopt;
        return ArithmeticProgression(1, *it, 1);
    }

    for (; it != mem.end(); ++it) {
        const std::int64_t a = *it;
        const std::int64_t max_step = (bound - a) / (length_ - 1);
        auto jt = it + 1;
        if (after && a == after->base) jt = std::upper_bound(jt, mem.end(), a + after->step);
        for (; jt != mem.end(); ++jt) {
            const std::int64_t d = *jt - a;
            if (d > max_step) break;
            std::int64_t i = 2;
            while (i < length_ && index_->contains(a + i * d)) ++i;
            if (i == length_) return ArithmeticProgression(length_, a, d);
        }
    }
    return std::nullopt;
}

std::optional<ArithmeticProgression> ApCursor::next() {
    if (exhausted_) return std::nullopt;
    auto ap = find_after(last_);
    if (!ap) {
        exhausted_ = true;
        return std::nullopt;
    }
    last_ = ApKey{ap->base(), ap->step()};
    return ap;
}

ApSearchResult find_ap(const SetSource& source, std::int64_t k, std::int64_t search_bound) {
    ApCursor cursor(source, k, search_bound);
    return {cursor.find_after(std::nullopt), search_bound};
}

ApSearchResult find_next_ap(const SetSource& source, std::int64_t k, std::int64_t search_bound, ApKey after) {
    ApCursor cursor(source, k, search_bound);
    return {cursor.find_after(after), search_bound};
}

PrimeLikeAudit audit_prime_like(const SetSource& source, std::int64_t k_max, std::int64_t search_bound) {
    if (k_max < 3) throw Error(ErrorKind::invalid_argument, "k_max must be >= 3");
    const MembershipIndex index(source, search_bound);
    const auto& mem = index.members();
    PrimeLikeAudit audit;
    audit.k_max = k_max;
    audit.search_bound = search_bound;
    for (std::size_t ai = 0; ai < mem.size(); ++ai) {
        const std::int64_t a = mem[ai];
        for (std::size_t j = ai + 1; j < mem.size(); ++j) {
            const std::int64_t d = mem[j] - a;
            if (a + 2 * d > search_bound) break;
            if (!index.contains(a + 2 * d)) continue;
            std::int64_t run = 3;
            while (a + run * d <= search_bound && index.contains(a + run * d)) ++run;
            const bool coprime = std::gcd(a, d) == 1;
            const ArithmeticProgression ap(std::min(run, k_max), a, d);
            ++audit.sub_aps_checked;
            if (!coprime) audit.sub_ap_violations.push_back(ap);
            const bool left_maximal = a - d < 0 || !index.contains(a - d);
            if (!left_maximal) continue;
            ++audit.maximal_checked;
            if (!coprime) audit.violations.push_back(ap);
            if (d % 2 != 0) audit.odd_steps.push_back(ap);
        }
    }
    return audit;
}

}  // namespace apsolve
