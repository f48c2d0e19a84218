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

#include "modalq/state.h"

#include <algorithm>
#include <bit>
#include <random>

#include "modalq/error.h"

namespace modalq {

namespace {

template <typename F>
void for_each_term(const Vector &v, F &&f) {
    std::visit(
        [&](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, BitVector>) {
                auto words = s.words();
                for (size_t k = 0; k < words.size(); k++) {
                    uint64_t w = words[k];
                    while (w) {
                        f(Term{(uint64_t{k} << 6) | static_cast<uint64_t>(std::countr_zero(w)), 1});
                        w &= w - 1;
                    }
                }
            } else if constexpr (std::is_same_v<T, std::vector<uint32_t>>) {
                for (size_t i = 0; i < s.size(); i++) {
                    if (s[i]) {
                        f(Term{i, s[i]});
                    }
                }
            } else {
                for (const auto &t : s) {
                    f(t);
                }
            }
        },
        v.storage());
}

void check_register(unsigned num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw Error(
            ErrorKind::RegisterTooLarge,
            std::to_string(num_qubits) + " qubits requested; the limit is " + std::to_string(kMaxQubits));
    }
}

void check_index(unsigned num_qubits, BasisIndex index) {
    if (index >> num_qubits) {
        throw Error(
            ErrorKind::IndexOutOfRange,
            "basis index " + std::to_string(index) + " outside a " + std::to_string(num_qubits) + "-qubit register");
    }
}

Storage storage_from_terms(FieldSpec field, unsigned num_qubits, std::vector<Term> terms, Backend backend) {
    normalize_terms(terms, field.modulus());
    if (backend == Backend::sparse) {
        return terms;
    }
    uint64_t dim = uint64_t{1} << num_qubits;
    if (field.is_gf2()) {
        BitVector bits(dim);
        for (const auto &t : terms) {
            bits.set(t.index, true);
        }
        return bits;
    }
    std::vector<uint32_t> values(dim, 0);
    for (const auto &t : terms) {
        values[t.index] = t.value;
    }
    return values;
}

}  // namespace

std::string_view backend_name(Backend backend) {
    return backend == Backend::dense ? "dense" : "sparse";
}

Backend parse_backend(std::string_view name) {
    if (name == "dense") {
        return Backend::dense;
    }
    if (name == "sparse") {
        return Backend::sparse;
    }
    throw std::invalid_argument("unknown backend '" + std::string(name) + "' (expected dense or sparse)");
}

void normalize_terms(std::vector<Term> &terms, uint32_t p) {
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
        return a.index < b.index;
    });
    size_t out = 0;
    for (size_t i = 0; i < terms.size();) {
        BasisIndex idx = terms[i].index;
        uint32_t acc = 0;
        for (; i < terms.size() && terms[i].index == idx; i++) {
            acc = add_mod(acc, terms[i].value % p, p);
        }
        if (acc) {
            terms[out++] = Term{idx, acc};
        }
    }
    terms.resize(out);
}

Vector::Vector(FieldSpec field, unsigned num_qubits, Storage storage)
    : field_(field), num_qubits_(num_qubits), storage_(std::move(storage)) {
    check_register(num_qubits);
    uint64_t dim = uint64_t{1} << num_qubits;
    uint32_t p = field.modulus();
    std::visit(
        [&](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, BitVector>) {
                if (!field.is_gf2()) {
                    throw Error(ErrorKind::UnsupportedField, "packed bit storage requires GF(2)");
                }
                if (s.size() != dim) {
                    throw Error(ErrorKind::DimensionMismatch, "dense storage size differs from 2^m");
                }
            } else if constexpr (std::is_same_v<T, std::vector<uint32_t>>) {
                if (field.is_gf2()) {
                    throw Error(ErrorKind::UnsupportedField, "dense GF(2) vectors use packed bit storage");
                }
                if (s.size() != dim) {
                    throw Error(ErrorKind::DimensionMismatch, "dense storage size differs from 2^m");
                }
                for (uint32_t c : s) {
                    if (c >= p) {
                        throw Error(ErrorKind::IndexOutOfRange, "coefficient not reduced modulo p");
                    }
                }
            } else {
                for (size_t i = 0; i < s.size(); i++) {
                    if (s[i].index >= dim) {
                        throw Error(ErrorKind::IndexOutOfRange, "sparse term index outside the register");
                    }
                    if (s[i].value == 0 || s[i].value >= p) {
                        throw Error(ErrorKind::IndexOutOfRange, "sparse term coefficient must be a nonzero residue");
                    }
                    if (i && s[i - 1].index >= s[i].index) {
                        throw Error(ErrorKind::IndexOutOfRange, "sparse terms must be strictly increasing");
                    }
                }
            }
        },
        storage_);
}

Vector Vector::zero(FieldSpec field, unsigned num_qubits, Backend backend) {
    check_register(num_qubits);
    return Vector(field, num_qubits, storage_from_terms(field, num_qubits, {}, backend));
}

Vector Vector::basis(FieldSpec field, unsigned num_qubits, BasisIndex index, Backend backend) {
    check_register(num_qubits);
    check_index(num_qubits, index);
    return Vector(field, num_qubits, storage_from_terms(field, num_qubits, {Term{index, 1}}, backend));
}

Vector Vector::from_terms(FieldSpec field, unsigned num_qubits, std::vector<Term> terms, Backend backend) {
    check_register(num_qubits);
    for (const auto &t : terms) {
        check_index(num_qubits, t.index);
    }
    return Vector(field, num_qubits, storage_from_terms(field, num_qubits, std::move(terms), backend));
}

Vector Vector::from_support(unsigned num_qubits, std::span<const BasisIndex> indices, Backend backend) {
    std::vector<Term> terms;
    terms.reserve(indices.size());
    for (BasisIndex i : indices) {
        terms.push_back(Term{i, 1});
    }
    return from_terms(FieldSpec::gf2(), num_qubits, std::move(terms), backend);
}

Backend Vector::backend() const noexcept {
    return std::holds_alternative<std::vector<Term>>(storage_) ? Backend::sparse : Backend::dense;
}

Scalar Vector::coeff(BasisIndex index) const {
    check_index(num_qubits_, index);
    uint32_t value = std::visit(
        [&](const auto &s) -> uint32_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, BitVector>) {
                return s.get(index);
            } else if constexpr (std::is_same_v<T, std::vector<uint32_t>>) {
                return s[index];
            } else {
                auto it = std::lower_bound(s.begin(), s.end(), index, [](const Term &t, BasisIndex i) {
                    return t.index < i;
                });
                return it != s.end() && it->index == index ? it->value : 0;
            }
        },
        storage_);
    return Scalar(field_, value);
}

std::vector<Term> Vector::terms() const {
    std::vector<Term> out;
    for_each_term(*this, [&](Term t) {
        out.push_back(t);
    });
    return out;
}

std::vector<BasisIndex> Vector::support() const {
    if (auto bits = std::get_if<BitVector>(&storage_)) {
        return bits->set_bits();
    }
    std::vector<BasisIndex> out;
    for_each_term(*this, [&](Term t) {
        out.push_back(t.index);
    });
    return out;
}

size_t Vector::support_size() const {
    if (auto bits = std::get_if<BitVector>(&storage_)) {
        return bits->popcount();
    }
    if (auto sparse = std::get_if<std::vector<Term>>(&storage_)) {
        return sparse->size();
    }
    size_t n = 0;
    for_each_term(*this, [&](Term) {
        n++;
    });
    return n;
}

bool Vector::is_zero() const {
    if (auto bits = std::get_if<BitVector>(&storage_)) {
        return bits->none();
    }
    return support_size() == 0;
}

Vector Vector::with_backend(Backend backend) const {
    if (backend == this->backend()) {
        return *this;
    }
    return Vector(field_, num_qubits_, storage_from_terms(field_, num_qubits_, terms(), backend));
}

std::string Vector::str() const {
    std::string out;
    for_each_term(*this, [&](Term t) {
        if (!out.empty()) {
            out += " + ";
        }
        if (t.value != 1) {
            out += std::to_string(t.value);
        }
        out += "|";
        for (unsigned q = 0; q < num_qubits_; q++) {
            out += ((t.index >> wire_bit(num_qubits_, q)) & 1) ? '1' : '0';
        }
        out += "⟩";
    });
    return out.empty() ? "0" : out;
}

bool Vector::operator==(const Vector &other) const {
    if (field_ != other.field_ || num_qubits_ != other.num_qubits_) {
        return false;
    }
    if (backend() == other.backend()) {
        return storage_ == other.storage_;
    }
    return terms() == other.terms();
}

Vector add_vectors(const Vector &v, const Vector &w) {
    if (v.field() != w.field()) {
        throw Error(ErrorKind::MixedFields, "cannot add vectors over " + v.field().name() + " and " + w.field().name());
    }
    if (v.num_qubits() != w.num_qubits()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "cannot add a " + std::to_string(v.num_qubits()) + "-qubit vector to a " + std::to_string(w.num_qubits()) +
                "-qubit vector");
    }
    if (auto a = std::get_if<BitVector>(&v.storage())) {
        if (auto b = std::get_if<BitVector>(&w.storage())) {
            BitVector sum = *a;
            sum ^= *b;
            return Vector(v.field(), v.num_qubits(), std::move(sum));
        }
    }
    std::vector<Term> all = v.terms();
    for (const auto &t : w.terms()) {
        all.push_back(t);
    }
    return Vector::from_terms(v.field(), v.num_qubits(), std::move(all), v.backend());
}

Vector scale(Scalar c, const Vector &v) {
    if (c.field() != v.field()) {
        throw Error(ErrorKind::MixedFields, "scalar and vector fields differ");
    }
    std::vector<Term> out = v.terms();
    for (auto &t : out) {
        t.value = mul_mod(t.value, c.value(), v.field().modulus());
    }
    return Vector::from_terms(v.field(), v.num_qubits(), std::move(out), v.backend());
}

State to_state(Vector v) {
    if (v.is_zero()) {
        throw Error(ErrorKind::ZeroVector, "the zero vector is not a valid quantum state");
    }
    return State(std::move(v));
}

State basis_state(unsigned num_qubits, BasisIndex index, Backend backend) {
    return basis_state(FieldSpec::gf2(), num_qubits, index, backend);
}

State basis_state(FieldSpec field, unsigned num_qubits, BasisIndex index, Backend backend) {
    return to_state(Vector::basis(field, num_qubits, index, backend));
}

State ket0(Backend backend) {
    return basis_state(1, 0, backend);
}

State ket1(Backend backend) {
    return basis_state(1, 1, backend);
}

State ket_plus(Backend backend) {
    std::vector<BasisIndex> both{0, 1};
    return to_state(Vector::from_support(1, both, backend));
}

std::string one_qubit_label(const Vector &v) {
    if (!v.field().is_gf2() || v.num_qubits() != 1) {
        throw Error(ErrorKind::DimensionMismatch, "one-qubit labels exist only for one-qubit GF(2) vectors");
    }
    bool c0 = v.coeff(0).value();
    bool c1 = v.coeff(1).value();
    if (c0 && c1) {
        return "|+⟩";
    }
    if (c0) {
        return "|0⟩";
    }
    if (c1) {
        return "|1⟩";
    }
    return "0";
}

State tensor(const State &a, const State &b) {
    if (a.field() != b.field()) {
        throw Error(ErrorKind::MixedFields, "cannot tensor states over different fields");
    }
    unsigned m = a.num_qubits() + b.num_qubits();
    check_register(m);
    uint32_t p = a.field().modulus();
    std::vector<Term> left = a.vector().terms();
    std::vector<Term> right = b.vector().terms();
    std::vector<Term> out;
    out.reserve(left.size() * right.size());
    for (const auto &s : left) {
        for (const auto &t : right) {
            out.push_back(Term{(s.index << b.num_qubits()) | t.index, mul_mod(s.value, t.value, p)});
        }
    }
    return to_state(Vector::from_terms(a.field(), m, std::move(out), a.backend()));
}

State tensor_all(std::span<const State> parts) {
    if (parts.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "tensor of an empty list");
    }
    State acc = parts[0];
    for (size_t k = 1; k < parts.size(); k++) {
        acc = tensor(acc, parts[k]);
    }
    return acc;
}

std::vector<State> enumerate_states(FieldSpec field, unsigned num_qubits, Backend backend) {
    uint64_t dim = uint64_t{1} << num_qubits;
    uint64_t p = field.modulus();
    uint64_t count = 1;
    for (uint64_t k = 0; k < dim; k++) {
        count *= p;
        if (count > (uint64_t{1} << 20)) {
            throw Error(ErrorKind::RegisterTooLarge, "too many vectors to enumerate");
        }
    }
    std::vector<State> out;
    for (uint64_t code = 1; code < count; code++) {
        std::vector<Term> terms;
        uint64_t c = code;
        for (uint64_t i = 0; i < dim; i++) {
            terms.push_back(Term{i, static_cast<uint32_t>(c % p)});
            c /= p;
        }
        out.push_back(to_state(Vector::from_terms(field, num_qubits, std::move(terms), backend)));
    }
    return out;
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

Outcome measure(const State &s, uint64_t seed) {
    const Vector &v = s.vector();
    uint64_t h = splitmix64(seed ^ (uint64_t{v.field().modulus()} << 32) ^ v.num_qubits());
    size_t count = 0;
    for_each_term(v, [&](Term t) {
        h = splitmix64(h ^ t.index);
        h = splitmix64(h ^ t.value);
        count++;
    });
    std::mt19937_64 rng(h);
    std::uniform_int_distribution<size_t> pick(0, count - 1);
    size_t k = pick(rng);
    if (auto bits = std::get_if<BitVector>(&v.storage())) {
        return Outcome{bits->nth_set_bit(k)};
    }
    return Outcome{v.terms()[k].index};
}

}  // namespace modalq
