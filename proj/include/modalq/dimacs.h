// Copyright 2026 The modalq Authors
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

#ifndef MODALQ_DIMACS_H
#define MODALQ_DIMACS_H

#include <string>
#include <string_view>

#include "modalq/error.h"
#include "modalq/oracle.h"

namespace modalq {

struct ParseDiagnostic {
    size_t line = 1;    // 1-based
    size_t column = 1;  // 1-based, in bytes
    std::string message;
    ErrorKind kind = ErrorKind::BadToken;

    /// `line:column: message`
    std::string str() const;
};

class ParseError : public Error {
   public:
    explicit ParseError(ParseDiagnostic diagnostic);
    const ParseDiagnostic &diagnostic() const noexcept {
        return diagnostic_;
    }

   private:
    ParseDiagnostic diagnostic_;
};

struct DimacsOptions {
    /// Accept a missing final 0 at end of input, more clauses than the header
    /// declares and a '%' end-of-data marker.
    bool lenient = false;
};

/// Reads `p cnf <vars> <clauses>` followed by 0-terminated clauses. Lines whose
/// first non-blank character is 'c' are comments. Files declaring more than
/// kMaxArity variables are rejected. Throws ParseError.
Cnf parse_dimacs(std::string_view text, const DimacsOptions &options = {});

/// Canonical form: header, then one clause per line ending in " 0".
std::string format_dimacs(const Cnf &cnf);

}  // namespace modalq

#endif
