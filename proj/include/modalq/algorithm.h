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

#ifndef MODALQ_ALGORITHM_H
#define MODALQ_ALGORITHM_H

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "modalq/oracle.h"
#include "modalq/state.h"

namespace modalq {

enum class Verdict {
    unsat,
    sat,
};

std::string_view verdict_name(Verdict v);

/// JSON/trace labels of the eight circuit steps, in order.
inline constexpr std::array<std::string_view, 8> kStepLabels = {
    "init", "spread", "oracle", "unspread", "sdag_y", "cnot", "sdag_y2", "decide",
};

struct TraceStep {
    std::string_view label;
    State state;
};

struct Trace {
    std::vector<TraceStep> steps;
};

/// Gate applications performed by one run of the circuit.
struct CircuitStats {
    unsigned single_qubit_gates = 0;
    unsigned oracle_calls = 0;
    unsigned fanout_cnots = 0;
    bool operator==(const CircuitStats &other) const = default;
};

struct RunOptions {
    bool skip_promise_check = false;
    bool capture_trace = false;
    Backend backend = Backend::dense;
};

struct RunResult {
    unsigned n = 0;
    /// Empty only when the promise check was skipped and f has more than one
    /// satisfying assignment.
    std::optional<Verdict> verdict;
    uint64_t sat_count = 0;
    std::vector<BasisIndex> final_support;
    std::optional<Trace> trace;
    std::optional<Outcome> outcome;
    CircuitStats stats;
};

/// Number of satisfying assignments of f, by exhaustive count.
uint64_t check_promise(const BoolFn &f);

/// Runs the constant-depth circuit and decides from the whole final support:
/// unsat iff the support is exactly {|0>|0..0>}, sat iff it excludes it.
RunResult run_unique_sat(const BoolFn &f, const RunOptions &options = {});

/// Same circuit; the verdict comes from one standard-basis measurement.
RunResult run_unique_sat_sampled(const BoolFn &f, uint64_t seed, const RunOptions &options = {});

/// The eight labeled intermediate states. Enforces the promise.
Trace trace(const BoolFn &f, Backend backend = Backend::dense);

}  // namespace modalq

#endif
