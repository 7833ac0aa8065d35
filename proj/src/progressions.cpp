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

#include "apsolve/progressions.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "apsolve/error.hpp"

namespace apsolve {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool mul_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return __builtin_mul_overflow(a, b, &out);
}

bool add_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return __builtin_add_overflow(a, b, &out);
}

// Visits base + sum n_i * steps_i for every index tuple with n_i in
// [lo_i, hi_i), odometer order.
template <class F>
void for_each_combination(std::int64_t base, const std::vector<std::int64_t>& steps,
                          const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi, F&& f) {
    const std::size_t d = steps.size();
    std::vector<std::int64_t> idx(lo);
    for (std::size_t i = 0; i < d; ++i)
        if (lo[i] >= hi[i]) return;
    for (;;) {
        std::int64_t v = base;
        for (std::size_t i = 0; i < d; ++i) v += idx[i] * steps[i];
        f(v);
        std::size_t i = 0;
        while (i < d && ++idx[i] == hi[i]) idx[i] = lo[i], ++i;
        if (i == d) return;
    }
}

GapExpansion finish(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    const std::size_t before = values.size();
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const bool dup = values.size() != before;
    return {std::move(values), dup};
}

}  // namespace

ArithmeticProgression::ArithmeticProgression(std::int64_t length, std::int64_t base, std::int64_t step)
    : length_(length), base_(base), step_(step) {
    if (length < 1 || base < 0 || step < 1)
        throw Error(ErrorKind::invalid_argument, "AP needs length >= 1, base >= 0, step >= 1 (got k=" +
                                                     std::to_string(length) + ", a=" + std::to_string(base) +
                                                     ", d=" + std::to_string(step) + ")");
    std::int64_t span = 0, last = 0;
    if (mul_overflows(length - 1, step, span) || add_overflows(base, span, last))
        throw Error(ErrorKind::invalid_argument, "AP elements exceed 64-bit range");
}

std::vector<std::int64_t> ap_elements(const ArithmeticProgression& ap) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(ap.length()));
    for (std::int64_t i = 0; i < ap.length(); ++i) out[i] = ap.element(i);
    return out;
}

bool ap_contains(const ArithmeticProgression& ap, std::int64_t x) {
    if (x < ap.base()) return false;
    const std::int64_t off = x - ap.base();
    return off % ap.step() == 0 && off / ap.step() < ap.length();
}

std::int64_t volume_product(std::span<const std::int64_t> volumes) noexcept {
    std::int64_t p = 1;
    for (std::int64_t v : volumes)
        if (mul_overflows(p, v, p)) return kMax;
    return p;
}

void validate(const GeneralizedAP& g) {
    if (g.steps.empty() || g.steps.size() != g.volumes.size())
        throw Error(ErrorKind::invalid_argument, "GAP needs dimension >= 1 and one volume per step");
    if (g.base < 0) throw Error(ErrorKind::invalid_argument, "GAP base must be >= 0");
    std::int64_t top = g.base;
    for (std::size_t i = 0; i < g.steps.size(); ++i) {
        if (g.steps[i] < 1 || g.volumes[i] < 1)
            throw Error(ErrorKind::invalid_argument, "GAP steps and volumes must be >= 1");
        std::int64_t span = 0;
        if (mul_overflows(g.volumes[i] - 1, g.steps[i], span) || add_overflows(top, span, top))
            throw Error(ErrorKind::invalid_argument, "GAP elements exceed 64-bit range");
    }
}

GapExpansion gap_elements(const GeneralizedAP& g) {
    validate(g);
    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(volume_product(g.volumes)));
    std::vector<std::int64_t> lo(g.dimension(), 0);
    for_each_combination(g.base, g.steps, lo, g.volumes, [&](std::int64_t v) { values.push_back(v); });
    return finish(std::move(values));
}

GapExpansion centered_elements(const CenteredGAP& g) {
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t h : g.half_widths) {
        lo.push_back(-(h - 1));
        hi.push_back(h);
    }
    std::vector<std::int64_t> values;
    for_each_combination(g.center, g.steps, lo, hi, [&](std::int64_t v) { values.push_back(v); });
    return finish(std::move(values));
}

CenteredGAP to_centered(const GeneralizedAP& g) {
    validate(g);
    CenteredGAP out;
    out.center = g.base;
    out.steps = g.steps;
    for (std::size_t i = 0; i < g.dimension(); ++i) {
        if (g.volumes[i] % 2 == 0)
            throw Error(ErrorKind::volume_not_odd, "volume not odd: " + std::to_string(g.volumes[i]));
        const std::int64_t half = (g.volumes[i] + 1) / 2;
        out.half_widths.push_back(half);
        out.center += (half - 1) * g.steps[i];
    }
    return out;
}

GeneralizedAP embed_gap_in_ap(const ArithmeticProgression& ap, std::span<const std::int64_t> volumes) {
    if (volumes.empty()) throw Error(ErrorKind::invalid_argument, "GAP dimension must be >= 1");
    for (std::int64_t v : volumes)
        if (v < 1) throw Error(ErrorKind::invalid_argument, "GAP volumes must be >= 1");
    const std::int64_t need = volume_product(volumes);
    if (ap.length() < need)
        throw Error(ErrorKind::ap_too_short, "AP too short: length " + std::to_string(ap.length()) +
                                                 " < required " + std::to_string(need));
    GeneralizedAP g;
    g.base = ap.base();
    std::int64_t radix = 1;
    for (std::int64_t v : volumes) {
        g.steps.push_back(ap.step() * radix);
        g.volumes.push_back(v);
        radix *= v;
    }
    return g;
}

}  // namespace apsolve
