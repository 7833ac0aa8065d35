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

#include <stdexcept>
#include <string>

namespace apsolve {

enum class ErrorKind {
    invalid_argument,
    parse,
    not_null_diagonal,
    volume_not_odd,
    ap_too_short,
    beyond_bound,
    not_applicable,
    not_progression_solution,
    constant_vector,
    invariant_violation,
};

const char* to_string(ErrorKind kind);

// Every failure the library reports carries a stable kind so the CLI can map
// it onto an exit status and a machine-parsable diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace apsolve
