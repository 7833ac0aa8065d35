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

#include "apsolve/equivalence_demos.hpp"

#include <string>

#include "apsolve/error.hpp"
#include "apsolve/exact_linalg.hpp"

namespace apsolve {

IntegerMatrix progression_matrix(std::int64_t n) {
    if (n < 3) throw Error(ErrorKind::invalid_argument, "progression matrix needs n >= 3");
    const auto cols = static_cast<std::size_t>(n);
    std::vector<IntegerVector> rows(cols - 2, IntegerVector(cols, Integer(0)));
    for (std::size_t i = 0; i + 2 < cols; ++i) {
        rows[i][i] = 1;
        rows[i][i + 1] = -2;
        rows[i][i + 2] = 1;
    }
    IntegerMatrix m(std::move(rows));

    IntegerVector ones(cols, Integer(1)), ramp(cols);
    for (std::size_t j = 0; j < cols; ++j) ramp[j] = static_cast<long>(j);
    bool ok = rank(m) == cols - 2;
    for (const auto* v : {&ones, &ramp})
        for (const auto& e : m.apply(*v)) ok = ok && e == 0;
    if (!ok) throw Error(ErrorKind::invariant_violation, "progression matrix nullspace check failed");
    return m;
}

ArithmeticProgression extract_ap(std::span<const std::int64_t> x) {
    if (x.size() < 3) throw Error(ErrorKind::invalid_argument, "progression solutions have length >= 3");
    for (std::size_t i = 0; i + 2 < x.size(); ++i)
        if (x[i] - 2 * x[i + 1] + x[i + 2] != 0)
            throw Error(ErrorKind::not_progression_solution,
                        "not a progression solution: nonzero second difference at index " + std::to_string(i));
    const std::int64_t base = x.front();
    const std::int64_t step = x[1] - x[0];
    const auto n = static_cast<std::int64_t>(x.size());
    if (step == 0) throw Error(ErrorKind::constant_vector, "constant vector has no progression step");
    if (step > 0) return ArithmeticProgression(n, base, step);
    return ArithmeticProgression(n, x.back(), -step);
}

EquivalenceDemo zero_solution_to_ap_demo(const SetSource& source, std::int64_t n, std::int64_t count,
                                         std::int64_t search_bound, SolverOptions options) {
    EquivalenceDemo demo;
    demo.stream = solution_stream(progression_matrix(n), source, count, search_bound, options);
    for (const auto& s : demo.stream.solutions) {
        const ArithmeticProgression ap = extract_ap(s.x);
        for (std::int64_t i = 0; i < ap.length(); ++i)
            if (!source.contains(ap.element(i)))
                throw Error(ErrorKind::invariant_violation, "recovered AP leaves the source");
        demo.aps.push_back(ap);
    }
    return demo;
}

ReciprocalSum erdos_turan_partial_sum(const SetSource& source, std::int64_t bound) {
    ReciprocalSum out;
    out.value = 0;
    if (bound < 0) return out;
    for (std::int64_t a : source.enumerate_up_to(bound)) {
        if (a == 0) {
            out.skipped_zero = true;
            continue;
        }
        out.value += Rational(1, static_cast<unsigned long>(a));
        ++out.terms;
    }
    out.value.canonicalize();
    return out;
}

std::string to_decimal(const Rational& q, int digits) {
    Integer num = abs(q.get_num());
    const Integer& den = q.get_den();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Integer whole = num / den;
    const Integer frac = (num % den) * scale / den;
    std::string f = frac.get_str();
    if (static_cast<int>(f.size()) < digits) f.insert(0, digits - f.size(), '0');
    std::string out = (q < 0 ? "-" : "") + whole.get_str();
    if (digits > 0) out += "." + f;
    return out;
}

}  // namespace apsolve
