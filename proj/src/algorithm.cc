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

#include "modalq/algorithm.h"

#include <numeric>

#include "modalq/error.h"
#include "modalq/ops.h"

namespace modalq {

std::string_view verdict_name(Verdict v) {
    return v == Verdict::sat ? "sat" : "unsat";
}

uint64_t check_promise(const BoolFn &f) {
    return count_sat(f);
}

namespace {

struct CircuitRun {
    State final_state;
    std::optional<Trace> trace;
    CircuitStats stats;
};

CircuitRun run_circuit(const BoolFn &f, Backend backend, bool capture) {
    unsigned n = f.arity();
    const Gate2 s = named_gate(NamedGate::S);
    const Gate2 s_dag = named_gate(NamedGate::S_DAG);
    std::vector<unsigned> inputs(n);
    std::iota(inputs.begin(), inputs.end(), 1u);

    CircuitRun run{basis_state(n + 1, 0, backend), std::nullopt, {}};
    if (capture) {
        run.trace.emplace();
    }
    auto record = [&](size_t step) {
        if (run.trace) {
            run.trace->steps.push_back(TraceStep{kStepLabels[step], run.final_state});
        }
    };
    auto spread_inputs = [&] {
        for (unsigned q : inputs) {
            run.final_state = apply_single(s, q, run.final_state);
            run.stats.single_qubit_gates++;
        }
    };

    record(0);
    spread_inputs();
    record(1);
    run.final_state = apply_oracle(f, run.final_state);
    run.stats.oracle_calls++;
    record(2);
    spread_inputs();
    record(3);
    run.final_state = apply_single(s_dag, 0, run.final_state);
    run.stats.single_qubit_gates++;
    record(4);
    run.final_state = fanout_cnot(0, inputs, run.final_state);
    run.stats.fanout_cnots++;
    record(5);
    run.final_state = apply_single(s_dag, 0, run.final_state);
    run.stats.single_qubit_gates++;
    record(6);
    // The decision step measures; the state itself is unchanged.
    record(7);
    return run;
}

RunResult run_common(const BoolFn &f, const RunOptions &options, std::optional<State> *final_state = nullptr) {
    RunResult result;
    result.n = f.arity();
    result.sat_count = check_promise(f);
    bool promise_holds = result.sat_count <= 1;
    if (!promise_holds && !options.skip_promise_check) {
        throw Error(
            ErrorKind::PromiseViolated,
            "f has " + std::to_string(result.sat_count) + " satisfying assignments; at most one is promised");
    }
    CircuitRun run = run_circuit(f, options.backend, options.capture_trace);
    result.final_support = run.final_state.support();
    result.trace = std::move(run.trace);
    result.stats = run.stats;
    if (final_state) {
        *final_state = std::move(run.final_state);
    }

    const auto &support = result.final_support;
    bool has_zero = !support.empty() && support.front() == 0;
    if (has_zero && support.size() > 1 && promise_holds) {
        throw Error(
            ErrorKind::InternalContradiction,
            "final support contains |0...0> alongside " + std::to_string(support.size() - 1) +
                " other basis states although the promise holds");
    }
    if (promise_holds) {
        result.verdict = has_zero ? Verdict::unsat : Verdict::sat;
    }
    return result;
}

}  // namespace

RunResult run_unique_sat(const BoolFn &f, const RunOptions &options) {
    return run_common(f, options);
}

RunResult run_unique_sat_sampled(const BoolFn &f, uint64_t seed, const RunOptions &options) {
    std::optional<State> final_state;
    RunResult result = run_common(f, options, &final_state);
    result.outcome = measure(*final_state, seed);
    if (result.verdict) {
        result.verdict = result.outcome->index == 0 ? Verdict::unsat : Verdict::sat;
    }
    return result;
}

Trace trace(const BoolFn &f, Backend backend) {
    RunOptions options;
    options.capture_trace = true;
    options.backend = backend;
    return std::move(*run_unique_sat(f, options).trace);
}

}  // namespace modalq
