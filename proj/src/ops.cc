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

#include "modalq/ops.h"

#include <algorithm>

#include "modalq/error.h"

namespace modalq {

namespace {

// Masks selecting the lanes whose bit `pos` is clear, for pos < 6.
constexpr std::array<uint64_t, 6> kLowLanes = {
    0x5555555555555555ULL,
    0x3333333333333333ULL,
    0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL,
    0x0000FFFF0000FFFFULL,
    0x00000000FFFFFFFFULL,
};

inline uint64_t lanes(uint32_t bit) {
    return uint64_t{0} - bit;
}

// Pairwise butterfly over indices differing in bit `pos`, 64 lanes at a time.
BitVector butterfly_gf2(const BitVector &in, unsigned pos, std::array<uint32_t, 4> g) {
    uint64_t A = lanes(g[0]), B = lanes(g[1]), C = lanes(g[2]), D = lanes(g[3]);
    BitVector out = in;
    auto w = out.words();
    if (pos < 6) {
        unsigned shift = 1u << pos;
        uint64_t lo = kLowLanes[pos];
        for (auto &word : w) {
            uint64_t v0 = word & lo;
            uint64_t v1 = (word >> shift) & lo;
            uint64_t n0 = (A & v0) ^ (B & v1);
            uint64_t n1 = (C & v0) ^ (D & v1);
            word = n0 | (n1 << shift);
        }
        return out;
    }
    size_t stride = size_t{1} << (pos - 6);
    for (size_t base = 0; base < w.size(); base += 2 * stride) {
        for (size_t j = base; j < base + stride; j++) {
            uint64_t v0 = w[j];
            uint64_t v1 = w[j + stride];
            w[j] = (A & v0) ^ (B & v1);
            w[j + stride] = (C & v0) ^ (D & v1);
        }
    }
    return out;
}

std::vector<uint32_t> butterfly_gfp(const std::vector<uint32_t> &in, unsigned pos, std::array<uint32_t, 4> g, uint32_t p) {
    std::vector<uint32_t> out = in;
    uint64_t mask = uint64_t{1} << pos;
    for (uint64_t i = 0; i < out.size(); i++) {
        if (i & mask) {
            continue;
        }
        uint32_t v0 = in[i];
        uint32_t v1 = in[i | mask];
        out[i] = add_mod(mul_mod(g[0], v0, p), mul_mod(g[1], v1, p), p);
        out[i | mask] = add_mod(mul_mod(g[2], v0, p), mul_mod(g[3], v1, p), p);
    }
    return out;
}

std::vector<Term> expand_sparse(const std::vector<Term> &in, unsigned pos, std::array<uint32_t, 4> g, uint32_t p) {
    uint64_t mask = uint64_t{1} << pos;
    std::vector<Term> out;
    out.reserve(2 * in.size());
    for (const auto &t : in) {
        bool bit = t.index & mask;
        uint32_t top = bit ? g[1] : g[0];
        uint32_t bottom = bit ? g[3] : g[2];
        if (top) {
            out.push_back(Term{t.index & ~mask, mul_mod(top, t.value, p)});
        }
        if (bottom) {
            out.push_back(Term{t.index | mask, mul_mod(bottom, t.value, p)});
        }
    }
    normalize_terms(out, p);
    return out;
}

void check_wire(unsigned q, unsigned num_qubits) {
    if (q >= num_qubits) {
        throw Error(
            ErrorKind::IndexOutOfRange,
            "wire " + std::to_string(q) + " outside a " + std::to_string(num_qubits) + "-qubit register");
    }
}

}  // namespace

Gate2::Gate2(Scalar a, Scalar b, Scalar c, Scalar d) : a_(a), b_(b), c_(c), d_(d) {
    FieldSpec f = a.field();
    if (b.field() != f || c.field() != f || d.field() != f) {
        throw Error(ErrorKind::MixedFields, "gate entries from different fields");
    }
}

Gate2::Gate2(FieldSpec field, std::array<uint32_t, 4> e)
    : Gate2(Scalar(field, e[0]), Scalar(field, e[1]), Scalar(field, e[2]), Scalar(field, e[3])) {
}

Scalar Gate2::det() const {
    return a_ * d_ - b_ * c_;
}

std::string Gate2::str() const {
    auto e = entries();
    return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + "]]";
}

std::string_view named_gate_name(NamedGate g) {
    switch (g) {
        case NamedGate::S:
            return "S";
        case NamedGate::S_DAG:
            return "S_DAG";
        case NamedGate::X:
            return "X";
        case NamedGate::I:
            return "I";
    }
    return "?";
}

Gate2 named_gate(NamedGate name, FieldSpec field) {
    if (!field.is_gf2()) {
        throw Error(ErrorKind::UnsupportedField, "named gates are defined over GF(2) only, not " + field.name());
    }
    switch (name) {
        case NamedGate::S:
            return Gate2(field, {1, 0, 1, 1});
        case NamedGate::S_DAG:
            return Gate2(field, {1, 1, 0, 1});
        case NamedGate::X:
            return Gate2(field, {0, 1, 1, 0});
        case NamedGate::I:
            break;
    }
    return Gate2(field, {1, 0, 0, 1});
}

bool is_invertible(const Gate2 &g) {
    return g.invertible();
}

Gate2 compose(const Gate2 &g, const Gate2 &h) {
    if (g.field() != h.field()) {
        throw Error(ErrorKind::MixedFields, "cannot compose gates over different fields");
    }
    return Gate2(
        g.a() * h.a() + g.b() * h.c(),
        g.a() * h.b() + g.b() * h.d(),
        g.c() * h.a() + g.d() * h.c(),
        g.c() * h.b() + g.d() * h.d());
}

Gate2 inverse(const Gate2 &g) {
    if (!g.invertible()) {
        throw Error(ErrorKind::NonInvertibleGate, "gate " + g.str() + " has zero determinant");
    }
    Scalar k = inv(g.det());
    return Gate2(k * g.d(), k * -g.b(), k * -g.c(), k * g.a());
}

Vector apply_single_raw(const Gate2 &g, unsigned q, const Vector &v) {
    if (g.field() != v.field()) {
        throw Error(ErrorKind::MixedFields, "gate over " + g.field().name() + " applied to a vector over " + v.field().name());
    }
    check_wire(q, v.num_qubits());
    unsigned pos = wire_bit(v.num_qubits(), q);
    uint32_t p = v.field().modulus();
    auto e = g.entries();
    Storage out = std::visit(
        [&](const auto &s) -> Storage {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, BitVector>) {
                return butterfly_gf2(s, pos, e);
            } else if constexpr (std::is_same_v<T, std::vector<uint32_t>>) {
                return butterfly_gfp(s, pos, e, p);
            } else {
                return expand_sparse(s, pos, e, p);
            }
        },
        v.storage());
    return Vector(v.field(), v.num_qubits(), std::move(out));
}

State apply_single(const Gate2 &g, unsigned q, const State &s) {
    if (!g.invertible()) {
        throw Error(ErrorKind::NonInvertibleGate, "evolution requires an invertible map; " + g.str() + " is singular");
    }
    return to_state(apply_single_raw(g, q, s.vector()));
}

State fanout_cnot(unsigned control, std::span<const unsigned> targets, const State &s) {
    unsigned m = s.num_qubits();
    check_wire(control, m);
    uint64_t flip = 0;
    for (unsigned t : targets) {
        check_wire(t, m);
        if (t == control) {
            throw Error(ErrorKind::ControlInTargets, "control wire " + std::to_string(control) + " is also a target");
        }
        flip |= uint64_t{1} << wire_bit(m, t);
    }
    uint64_t ctrl = uint64_t{1} << wire_bit(m, control);
    return to_state(permute_basis(s.vector(), [=](BasisIndex i) {
        return (i & ctrl) ? i ^ flip : i;
    }));
}

MapCensus enumerate_1q_maps(FieldSpec field) {
    if (!field.is_gf2()) {
        throw Error(ErrorKind::UnsupportedField, "the one-qubit map census is defined over GF(2) only");
    }
    MapCensus census;
    for (uint32_t code = 0; code < 16; code++) {
        Gate2 g(field, {(code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1});
        (g.invertible() ? census.invertible : census.non_invertible).push_back(g);
    }
    return census;
}

}  // namespace modalq
