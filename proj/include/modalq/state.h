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

#ifndef MODALQ_STATE_H
#define MODALQ_STATE_H

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "modalq/bit_vector.h"
#include "modalq/field.h"

namespace modalq {

/// Registers are capped so a dense GF(2) vector stays at 16 MiB.
constexpr unsigned kMaxQubits = 27;

/// Index into the 2^m standard basis. Wire 0 (the y wire of the algorithm) is
/// the most significant bit; for a register |y>|x_1..x_n> the index is
/// (y << n) | x with x_1 the most significant bit of x.
using BasisIndex = uint64_t;

inline BasisIndex compose_index(unsigned n, uint64_t y, uint64_t x) noexcept {
    return (y << n) | x;
}
inline std::pair<uint64_t, uint64_t> split_index(unsigned n, BasisIndex index) noexcept {
    return {index >> n, index & ((uint64_t{1} << n) - 1)};
}
/// Bit position of wire q inside a basis index of an m-qubit register.
inline unsigned wire_bit(unsigned num_qubits, unsigned q) noexcept {
    return num_qubits - 1 - q;
}

enum class Backend {
    dense,
    sparse,
};

std::string_view backend_name(Backend backend);
Backend parse_backend(std::string_view name);

struct Term {
    BasisIndex index;
    uint32_t value;
    bool operator==(const Term &other) const = default;
};

/// Sorts by index, sums coefficients of equal indices modulo p and drops
/// zeros. Over GF(2) this is symmetric difference of index multisets.
void normalize_terms(std::vector<Term> &terms, uint32_t p);

/// Dense GF(2) storage is a BitVector, dense GF(p) a residue per basis state,
/// sparse storage the sorted nonzero terms.
using Storage = std::variant<BitVector, std::vector<uint32_t>, std::vector<Term>>;

/// Coefficient vector of an m-qubit register over GF(p). May be zero.
class Vector {
   public:
    /// Validates that the storage matches the field, register size and
    /// backend layout described by Storage.
    Vector(FieldSpec field, unsigned num_qubits, Storage storage);

    static Vector zero(FieldSpec field, unsigned num_qubits, Backend backend = Backend::dense);
    static Vector basis(FieldSpec field, unsigned num_qubits, BasisIndex index, Backend backend = Backend::dense);
    /// Terms may repeat and appear in any order; they are summed.
    static Vector from_terms(FieldSpec field, unsigned num_qubits, std::vector<Term> terms, Backend backend = Backend::dense);
    /// GF(2) sum of basis kets; a repeated index cancels.
    static Vector from_support(unsigned num_qubits, std::span<const BasisIndex> indices, Backend backend = Backend::dense);

    FieldSpec field() const noexcept {
        return field_;
    }
    unsigned num_qubits() const noexcept {
        return num_qubits_;
    }
    uint64_t dimension() const noexcept {
        return uint64_t{1} << num_qubits_;
    }
    Backend backend() const noexcept;
    const Storage &storage() const noexcept {
        return storage_;
    }

    Scalar coeff(BasisIndex index) const;
    std::vector<Term> terms() const;
    std::vector<BasisIndex> support() const;
    size_t support_size() const;
    bool is_zero() const;

    Vector with_backend(Backend backend) const;

    /// Ket rendering such as `|001⟩ + |100⟩ + |101⟩`; coefficients other than
    /// 1 are written as a prefix (`2|01⟩`). The zero vector renders as `0`.
    std::string str() const;

    /// Exact coefficient equality; the backend does not participate.
    bool operator==(const Vector &other) const;

   private:
    FieldSpec field_;
    unsigned num_qubits_;
    Storage storage_;
};

Vector add_vectors(const Vector &v, const Vector &w);

/// Linear extension of a bijection on basis indices. `perm` must map
/// [0, 2^m) onto itself.
template <typename Perm>
Vector permute_basis(const Vector &v, Perm &&perm) {
    if (auto bits = std::get_if<BitVector>(&v.storage())) {
        BitVector out(bits->size());
        for (BasisIndex i : bits->set_bits()) {
            out.set(perm(i), true);
        }
        return Vector(v.field(), v.num_qubits(), std::move(out));
    }
    if (auto values = std::get_if<std::vector<uint32_t>>(&v.storage())) {
        std::vector<uint32_t> out(values->size(), 0);
        for (size_t i = 0; i < values->size(); i++) {
            out[perm(i)] = (*values)[i];
        }
        return Vector(v.field(), v.num_qubits(), std::move(out));
    }
    std::vector<Term> out = v.terms();
    for (auto &t : out) {
        t.index = perm(t.index);
    }
    normalize_terms(out, v.field().modulus());
    return Vector(v.field(), v.num_qubits(), std::move(out));
}
Vector scale(Scalar c, const Vector &v);

/// Nonzero vector: a valid quantum state.
class State {
   public:
    const Vector &vector() const noexcept {
        return vector_;
    }
    FieldSpec field() const noexcept {
        return vector_.field();
    }
    unsigned num_qubits() const noexcept {
        return vector_.num_qubits();
    }
    Backend backend() const noexcept {
        return vector_.backend();
    }
    Scalar coeff(BasisIndex index) const {
        return vector_.coeff(index);
    }
    std::vector<BasisIndex> support() const {
        return vector_.support();
    }
    std::string str() const {
        return vector_.str();
    }
    State with_backend(Backend backend) const {
        return State(vector_.with_backend(backend));
    }

    bool operator==(const State &other) const {
        return vector_ == other.vector_;
    }

   private:
    explicit State(Vector v) : vector_(std::move(v)) {
    }
    friend State to_state(Vector v);

    Vector vector_;
};

/// Throws ZeroVector for the zero vector.
State to_state(Vector v);

State basis_state(unsigned num_qubits, BasisIndex index, Backend backend = Backend::dense);
State basis_state(FieldSpec field, unsigned num_qubits, BasisIndex index, Backend backend = Backend::dense);

// The three one-qubit GF(2) states.
State ket0(Backend backend = Backend::dense);
State ket1(Backend backend = Backend::dense);
State ket_plus(Backend backend = Backend::dense);

/// `|0⟩`, `|1⟩`, `|+⟩` or `0` for a one-qubit GF(2) vector.
std::string one_qubit_label(const Vector &v);

/// a's qubits become the high-order wires.
State tensor(const State &a, const State &b);
State tensor_all(std::span<const State> parts);

/// Every nonzero vector of the register, in increasing coefficient order.
/// Refuses registers with more than 2^20 candidate vectors.
std::vector<State> enumerate_states(FieldSpec field, unsigned num_qubits, Backend backend = Backend::dense);

struct Outcome {
    BasisIndex index;
    bool operator==(const Outcome &other) const = default;
};

/// Standard-basis measurement. The outcome is drawn uniformly from the
/// support by a pseudorandom function of (seed, state). Uniformity is a
/// simulator convention; the theory assigns no distribution.
Outcome measure(const State &s, uint64_t seed);

}  // namespace modalq

#endif
