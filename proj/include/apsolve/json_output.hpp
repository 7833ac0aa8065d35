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

#include <json.hpp>

#include "apsolve/ap_solver.hpp"
#include "apsolve/converse_analysis.hpp"
#include "apsolve/equivalence_demos.hpp"
#include "apsolve/exact_linalg.hpp"
#include "apsolve/progressions.hpp"
#include "apsolve/set_sources.hpp"

namespace apsolve::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Arbitrary-precision values are written as decimal strings; values that are
// bounded by a search bound are plain JSON integers.
Json big(const Integer& v);
Json big_vector(const IntegerVector& v);

Json ap(const ArithmeticProgression& p);
Json solution(const ApSolution& s);
Json basis(const NullspaceBasis& b);
Json stream(const SolutionStream& s);
Json report(const EnumerationReport& r);
Json classification(const Classification& c);
Json audit(const PrimeLikeAudit& a);

}  // namespace apsolve::json
