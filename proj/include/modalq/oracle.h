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

#ifndef MODALQ_ORACLE_H
#define MODALQ_ORACLE_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modalq/bit_vector.h"
#include "modalq/state.h"

namespace modalq {

/// Largest input arity; the oracle register then has kMaxArity + 1 wires.
constexpr unsigned kMaxArity = kMaxQubits - 1;

/// Boolean function on n input bits, stored as its 2^n-bit truth table.
/// Entry x holds f(x_1..x_n) with x_1 the most significant bit of x.
class BoolFn {
   public:
    BoolFn(unsigned arity, BitVector table);

    static BoolFn constant_false(unsigned arity);
    /// True exactly at `a`.
    static BoolFn point(unsigned arity, uint64_t a);
    /// Parses `n:bits`, bits in ascending x order, e.g. `2:0010`.
    static BoolFn parse_table(std::string_view text);

    unsigned arity() const noexcept {
        return arity_;
    }
    const BitVector &table() const noexcept {
        return table_;
    }
    bool operator()(uint64_t x) const {
        return table_.get(x);
    }

    /// `n:bits`, the inverse of parse_table.
    std::string str() const;

    bool operator==(const BoolFn &other) const = default;

   private:
    unsigned arity_;
    BitVector table_;
};

BoolFn boolfn_from_table(unsigned arity, std::span<const uint8_t> bits);

/// CNF over variables 1..num_vars; literal v > 0 is x_v, v < 0 its negation.
struct Cnf {
    unsigned num_vars = 0;
    std::vector<std::vector<int>> clauses;

    /// Throws InvalidCnf for a zero literal or a variable outside 1..num_vars.
    void validate() const;

    bool operator==(const Cnf &other) const = default;
};

/// Truth table of the conjunction, built clause by clause over packed words.
BoolFn boolfn_from_cnf(const Cnf &cnf);

uint64_t count_sat(const BoolFn &f);
std::vector<uint64_t> satisfying_assignments(const BoolFn &f);

/// The black box |y>|x> -> |y xor f(x)>|x> on an (n+1)-qubit GF(2) register.
State apply_oracle(const BoolFn &f, const State &s);

}  // namespace modalq

#endif
