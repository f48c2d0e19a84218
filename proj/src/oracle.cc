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

#include "modalq/oracle.h"

#include <charconv>

#include "modalq/error.h"

namespace modalq {

namespace {

void check_arity(unsigned arity) {
    if (arity < 1) {
        throw Error(ErrorKind::InvalidArity, "Boolean functions need at least one input bit");
    }
    if (arity > kMaxArity) {
        throw Error(
            ErrorKind::TooManyVariables,
            std::to_string(arity) + " input bits requested; the limit is " + std::to_string(kMaxArity));
    }
}

// Truth table of x_v over n inputs: bit x is set iff bit (n - v) of x is set.
BitVector variable_table(unsigned arity, unsigned var) {
    unsigned pos = arity - var;
    BitVector out(uint64_t{1} << arity);
    auto w = out.words();
    if (pos < 6) {
        static constexpr uint64_t kHighLanes[6] = {
            0xAAAAAAAAAAAAAAAAULL,
            0xCCCCCCCCCCCCCCCCULL,
            0xF0F0F0F0F0F0F0F0ULL,
            0xFF00FF00FF00FF00ULL,
            0xFFFF0000FFFF0000ULL,
            0xFFFFFFFF00000000ULL,
        };
        for (auto &word : w) {
            word = kHighLanes[pos];
        }
        if (arity < 6) {
            w[0] &= (uint64_t{1} << (uint64_t{1} << arity)) - 1;
        }
        return out;
    }
    size_t stride = size_t{1} << (pos - 6);
    for (size_t k = 0; k < w.size(); k++) {
        w[k] = ((k / stride) & 1) ? ~uint64_t{0} : 0;
    }
    return out;
}

}  // namespace

BoolFn::BoolFn(unsigned arity, BitVector table) : arity_(arity), table_(std::move(table)) {
    check_arity(arity);
    if (table_.size() != (uint64_t{1} << arity)) {
        throw Error(
            ErrorKind::LengthMismatch,
            "truth table has " + std::to_string(table_.size()) + " entries; arity " + std::to_string(arity) + " needs " +
                std::to_string(uint64_t{1} << arity));
    }
}

BoolFn BoolFn::constant_false(unsigned arity) {
    check_arity(arity);
    return BoolFn(arity, BitVector(uint64_t{1} << arity));
}

BoolFn BoolFn::point(unsigned arity, uint64_t a) {
    check_arity(arity);
    if (a >> arity) {
        throw Error(ErrorKind::IndexOutOfRange, "point " + std::to_string(a) + " outside the input space");
    }
    BitVector table(uint64_t{1} << arity);
    table.set(a, true);
    return BoolFn(arity, std::move(table));
}

BoolFn BoolFn::parse_table(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorKind::LengthMismatch, "truth table must look like n:bits");
    }
    unsigned arity = 0;
    auto head = text.substr(0, colon);
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), arity);
    if (ec != std::errc() || ptr != head.data() + head.size()) {
        throw Error(ErrorKind::InvalidArity, "bad arity '" + std::string(head) + "'");
    }
    check_arity(arity);
    auto body = text.substr(colon + 1);
    if (body.size() != (uint64_t{1} << arity)) {
        throw Error(
            ErrorKind::LengthMismatch,
            "arity " + std::to_string(arity) + " needs " + std::to_string(uint64_t{1} << arity) + " bits, got " +
                std::to_string(body.size()));
    }
    BitVector table(body.size());
    for (size_t i = 0; i < body.size(); i++) {
        if (body[i] != '0' && body[i] != '1') {
            throw Error(ErrorKind::LengthMismatch, "truth table bits must be 0 or 1");
        }
        table.set(i, body[i] == '1');
    }
    return BoolFn(arity, std::move(table));
}

std::string BoolFn::str() const {
    std::string out = std::to_string(arity_) + ":";
    for (uint64_t x = 0; x < table_.size(); x++) {
        out += table_.get(x) ? '1' : '0';
    }
    return out;
}

BoolFn boolfn_from_table(unsigned arity, std::span<const uint8_t> bits) {
    check_arity(arity);
    if (bits.size() != (uint64_t{1} << arity)) {
        throw Error(
            ErrorKind::LengthMismatch,
            "arity " + std::to_string(arity) + " needs " + std::to_string(uint64_t{1} << arity) + " bits, got " +
                std::to_string(bits.size()));
    }
    BitVector table(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        table.set(i, bits[i] != 0);
    }
    return BoolFn(arity, std::move(table));
}

void Cnf::validate() const {
    for (size_t k = 0; k < clauses.size(); k++) {
        for (int lit : clauses[k]) {
            if (lit == 0) {
                throw Error(ErrorKind::InvalidCnf, "clause " + std::to_string(k + 1) + " contains literal 0");
            }
            int64_t v = lit < 0 ? -int64_t{lit} : lit;
            if (v > num_vars) {
                throw Error(
                    ErrorKind::InvalidCnf,
                    "clause " + std::to_string(k + 1) + " references variable " + std::to_string(v) + " > " +
                        std::to_string(num_vars));
            }
        }
    }
}

BoolFn boolfn_from_cnf(const Cnf &cnf) {
    if (cnf.num_vars > kMaxArity) {
        throw Error(
            ErrorKind::TooManyVariables,
            std::to_string(cnf.num_vars) + " variables; the limit is " + std::to_string(kMaxArity));
    }
    check_arity(cnf.num_vars);
    cnf.validate();
    std::vector<BitVector> positive;
    for (unsigned v = 1; v <= cnf.num_vars; v++) {
        positive.push_back(variable_table(cnf.num_vars, v));
    }
    BitVector result = ~BitVector(uint64_t{1} << cnf.num_vars);
    for (const auto &clause : cnf.clauses) {
        BitVector sat(result.size());
        for (int lit : clause) {
            const BitVector &var = positive[std::abs(lit) - 1];
            sat |= lit > 0 ? var : ~var;
        }
        result &= sat;
    }
    return BoolFn(cnf.num_vars, std::move(result));
}

uint64_t count_sat(const BoolFn &f) {
    return f.table().popcount();
}

std::vector<uint64_t> satisfying_assignments(const BoolFn &f) {
    return f.table().set_bits();
}

State apply_oracle(const BoolFn &f, const State &s) {
    if (!s.field().is_gf2()) {
        throw Error(ErrorKind::UnsupportedField, "the oracle acts on GF(2) registers only");
    }
    unsigned n = f.arity();
    if (s.num_qubits() != n + 1) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "oracle for " + std::to_string(n) + " inputs needs " + std::to_string(n + 1) + " qubits, state has " +
                std::to_string(s.num_qubits()));
    }
    const Vector &v = s.vector();
    if (auto bits = std::get_if<BitVector>(&v.storage())) {
        // Conditional swap of the y=0 and y=1 halves, masked by the table.
        BitVector out = *bits;
        auto w = out.words();
        auto mask = f.table().words();
        if (n >= 6) {
            size_t half = w.size() / 2;
            for (size_t k = 0; k < half; k++) {
                uint64_t t = (w[k] ^ w[k + half]) & mask[k];
                w[k] ^= t;
                w[k + half] ^= t;
            }
        } else {
            unsigned shift = 1u << n;
            uint64_t lo_mask = (uint64_t{1} << shift) - 1;
            uint64_t lo = w[0] & lo_mask;
            uint64_t hi = (w[0] >> shift) & lo_mask;
            uint64_t t = (lo ^ hi) & mask[0];
            lo ^= t;
            hi ^= t;
            w[0] = lo | (hi << shift);
        }
        return to_state(Vector(v.field(), v.num_qubits(), std::move(out)));
    }
    uint64_t y_bit = uint64_t{1} << n;
    uint64_t x_mask = y_bit - 1;
    return to_state(permute_basis(v, [&](BasisIndex i) {
        return f(i & x_mask) ? i ^ y_bit : i;
    }));
}

}  // namespace modalq
