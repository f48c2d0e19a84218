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

#ifndef MODALQ_ERROR_H
#define MODALQ_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace modalq {

enum class ErrorKind {
    NotPrime,
    MixedFields,
    DivisionByZero,
    IndexOutOfRange,
    DimensionMismatch,
    RegisterTooLarge,
    ZeroVector,
    UnsupportedField,
    NonInvertibleGate,
    ControlInTargets,
    LengthMismatch,
    InvalidArity,
    TooManyVariables,
    InvalidCnf,
    PromiseViolated,
    InternalContradiction,
    MissingHeader,
    BadHeader,
    BadToken,
    LiteralOutOfRange,
    UnterminatedClause,
    ClauseCountMismatch,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace modalq

#endif
