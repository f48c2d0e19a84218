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

#include "modalq/field.h"

#include "modalq/error.h"

namespace modalq {

bool is_prime(uint32_t n) noexcept {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(uint32_t p) : p_(p) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, "field modulus " + std::to_string(p) + " is not prime");
    }
}

std::string FieldSpec::name() const {
    return "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(FieldSpec field, uint32_t value) : field_(field), value_(value) {
    if (value >= field.modulus()) {
        throw Error(
            ErrorKind::IndexOutOfRange,
            "scalar value " + std::to_string(value) + " not reduced modulo " + std::to_string(field.modulus()));
    }
}

static void require_same_field(const Scalar &a, const Scalar &b) {
    if (a.field() != b.field()) {
        throw Error(ErrorKind::MixedFields, "cannot combine " + a.field().name() + " with " + b.field().name());
    }
}

Scalar add(Scalar a, Scalar b) {
    require_same_field(a, b);
    return Scalar(a.field(), add_mod(a.value(), b.value(), a.field().modulus()));
}

Scalar sub(Scalar a, Scalar b) {
    return add(a, neg(b));
}

Scalar mul(Scalar a, Scalar b) {
    require_same_field(a, b);
    return Scalar(a.field(), mul_mod(a.value(), b.value(), a.field().modulus()));
}

Scalar neg(Scalar a) {
    uint32_t p = a.field().modulus();
    return Scalar(a.field(), a.value() == 0 ? 0 : p - a.value());
}

Scalar inv(Scalar a) {
    if (a.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative inverse in " + a.field().name());
    }
    // Fermat: a^(p-2).
    uint64_t p = a.field().modulus();
    uint64_t base = a.value();
    uint64_t e = p - 2;
    uint64_t r = 1;
    while (e) {
        if (e & 1) {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return Scalar(a.field(), static_cast<uint32_t>(r));
}

}  // namespace modalq
