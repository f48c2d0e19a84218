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

#ifndef MODALQ_OPS_H
#define MODALQ_OPS_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "modalq/field.h"
#include "modalq/state.h"

namespace modalq {

/// 2x2 matrix [[a, b], [c, d]] over a prime field. Columns are the images of
/// |0> and |1>: g|0> = a|0> + c|1>, g|1> = b|0> + d|1>.
class Gate2 {
   public:
    Gate2(Scalar a, Scalar b, Scalar c, Scalar d);
    /// Entries given as residues, row-major.
    Gate2(FieldSpec field, std::array<uint32_t, 4> entries);

    FieldSpec field() const noexcept {
        return a_.field();
    }
    Scalar a() const noexcept {
        return a_;
    }
    Scalar b() const noexcept {
        return b_;
    }
    Scalar c() const noexcept {
        return c_;
    }
    Scalar d() const noexcept {
        return d_;
    }
    std::array<uint32_t, 4> entries() const noexcept {
        return {a_.value(), b_.value(), c_.value(), d_.value()};
    }

    Scalar det() const;
    bool invertible() const {
        return !det().is_zero();
    }

    /// `[[a,b],[c,d]]`.
    std::string str() const;

    bool operator==(const Gate2 &other) const = default;

   private:
    Scalar a_, b_, c_, d_;
};

enum class NamedGate {
    S,
    S_DAG,
    X,
    I,
};

std::string_view named_gate_name(NamedGate g);

/// The GF(2) maps s (|0>↔|+>, fixes |1>), s† (|1>↔|+>, fixes |0>), negation
/// and identity. Other fields: UnsupportedField.
Gate2 named_gate(NamedGate name, FieldSpec field = FieldSpec::gf2());

bool is_invertible(const Gate2 &g);

/// g·h: h acts first.
Gate2 compose(const Gate2 &g, const Gate2 &h);

/// Adjugate over det. Throws NonInvertibleGate.
Gate2 inverse(const Gate2 &g);

/// Applies g to wire q (wire 0 is the most significant bit). Rejects
/// non-invertible gates.
State apply_single(const Gate2 &g, unsigned q, const State &s);

/// Any linear map, including singular ones; the result may be zero.
Vector apply_single_raw(const Gate2 &g, unsigned q, const Vector &v);

/// Flips every target wire on basis states whose control wire is 1.
State fanout_cnot(unsigned control, std::span<const unsigned> targets, const State &s);

struct MapCensus {
    std::vector<Gate2> invertible;
    std::vector<Gate2> non_invertible;
};

/// All 16 linear maps on one GF(2) qubit, entries enumerated as the 4-bit
/// number abcd in ascending order, partitioned by invertibility.
MapCensus enumerate_1q_maps(FieldSpec field = FieldSpec::gf2());

}  // namespace modalq

#endif
