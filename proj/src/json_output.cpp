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

#include "apsolve/json_output.hpp"

namespace apsolve::json {

Json big(const Integer& v) { return v.get_str(); }

Json big_vector(const IntegerVector& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(big(e));
    return out;
}

Json ap(const ArithmeticProgression& p) { return Json{{"k", p.length()}, {"a", p.base()}, {"d", p.step()}}; }

Json solution(const ApSolution& s) {
    return Json{{"x", s.x}, {"ap", ap(s.witness_ap)}, {"center", big(s.center)}, {"steps", s.steps}};
}

Json basis(const NullspaceBasis& b) {
    Json vectors = Json::array();
    for (const auto& v : b.vectors) vectors.push_back(big_vector(v));
    return Json{{"ambient_dim", b.ambient_dim},
                {"dimension", b.dimension()},
                {"ones_first", b.ones_first},
                {"vectors", std::move(vectors)}};
}

Json stream(const SolutionStream& s) {
    Json sols = Json::array();
    for (const auto& x : s.solutions) sols.push_back(solution(x));
    return Json{{"basis", basis(s.basis)},
                {"required_ap_length", s.required_ap_length},
                {"search_bound", s.search_bound},
                {"aps_consumed", s.aps_consumed},
                {"duplicates_skipped", s.duplicates_skipped},
                {"exhausted", s.exhausted},
                {"solutions", std::move(sols)}};
}

namespace {

Json constrained(const std::vector<ConstrainedSolution>& list) {
    Json out = Json::array();
    for (const auto& s : list) out.push_back(Json{{"x", s.x}, {"ap", ap(s.witness_ap)}});
    return out;
}

}  // namespace

Json report(const EnumerationReport& r) {
    return Json{{"violating_row", r.violating.row + 1},
                {"C", big(r.violating.abs_sum)},
                {"k", r.k},
                {"base_bound", r.base_bound},
                {"step_bound", r.step_bound},
                {"search_bound", r.search_bound},
                {"candidate_aps", r.candidate_aps},
                {"admissible_aps", r.admissible_aps},
                {"lambda_assignments_covered", big(r.lambda_assignments_covered)},
                {"lambda_assignments_evaluated", big(r.lambda_assignments_evaluated)},
                {"solutions", constrained(r.solutions)},
                {"brute_force_solutions", constrained(r.brute_force_solutions)},
                {"brute_force_agreement", r.brute_force_agreement},
                {"source_prime_like", r.source_prime_like},
                {"bounded_region_covered", r.bounded_region_covered}};
}

Json classification(const Classification& c) {
    Json out{{"verdict", to_string(c.verdict)}};
    if (c.samples) out["samples"] = stream(*c.samples);
    if (c.report) out["report"] = report(*c.report);
    if (c.verdict == Verdict::degenerate) out["degenerate_counterexamples"] = c.degenerate_counterexamples;
    return out;
}

Json audit(const PrimeLikeAudit& a) {
    auto list = [](const std::vector<ArithmeticProgression>& aps) {
        Json out = Json::array();
        for (const auto& p : aps) out.push_back(ap(p));
        return out;
    };
    return Json{{"k_max", a.k_max},
                {"search_bound", a.search_bound},
                {"maximal_checked", a.maximal_checked},
                {"violations", list(a.violations)},
                {"odd_steps", list(a.odd_steps)},
                {"sub_aps_checked", a.sub_aps_checked},
                {"sub_ap_violations", list(a.sub_ap_violations)},
                {"prime_like", a.prime_like()}};
}

}  // namespace apsolve::json
