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

#ifndef MODALQ_FIELD_H
#define MODALQ_FIELD_H

#include <cstdint>
#include <string>

namespace modalq {

/// A prime field GF(p). Construction rejects composite moduli.
class FieldSpec {
   public:
    explicit FieldSpec(uint32_t p);

    static FieldSpec gf2() {
        return FieldSpec(2);
    }

    uint32_t modulus() const noexcept {
        return p_;
    }
    bool is_gf2() const noexcept {
        return p_ == 2;
    }
    std::string name() const;

    bool operator==(const FieldSpec &other) const = default;

   private:
    uint32_t p_;
};

bool is_prime(uint32_t n) noexcept;

/// Element of a prime field. Scalars of different fields never combine.
class Scalar {
   public:
    Scalar(FieldSpec field, uint32_t value);

    static Scalar zero(FieldSpec field) {
        return Scalar(field, 0);
    }
    static Scalar one(FieldSpec field) {
        return Scalar(field, 1);
    }

    FieldSpec field() const noexcept {
        return field_;
    }
    uint32_t value() const noexcept {
        return value_;
    }
    bool is_zero() const noexcept {
        return value_ == 0;
    }

    bool operator==(const Scalar &other) const = default;

   private:
    FieldSpec field_;
    uint32_t value_;
};

Scalar add(Scalar a, Scalar b);
Scalar sub(Scalar a, Scalar b);
Scalar mul(Scalar a, Scalar b);
Scalar neg(Scalar a);
/// Multiplicative inverse; throws DivisionByZero for zero.
Scalar inv(Scalar a);

inline Scalar operator+(Scalar a, Scalar b) {
    return add(a, b);
}
inline Scalar operator-(Scalar a, Scalar b) {
    return sub(a, b);
}
inline Scalar operator-(Scalar a) {
    return neg(a);
}
inline Scalar operator*(Scalar a, Scalar b) {
    return mul(a, b);
}

// Raw residue arithmetic used by the state kernels. Inputs must already be
// reduced modulo p.
inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) noexcept {
    uint64_t s = uint64_t{a} + b;
    return static_cast<uint32_t>(s >= p ? s - p : s);
}
inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) noexcept {
    return static_cast<uint32_t>((uint64_t{a} * b) % p);
}

}  // namespace modalq

#endif
