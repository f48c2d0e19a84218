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

#include "gtest/gtest.h"

#include "modalq/error.h"
#include "test_util.h"

using namespace modalq;
using namespace modalq::testing;

namespace {

const Backend kBackends[] = {Backend::dense, Backend::sparse};

RunOptions with_backend(Backend b, bool trace = false) {
    RunOptions o;
    o.backend = b;
    o.capture_trace = trace;
    return o;
}

// Per-wire ket string of not(s(a_i)): s(0) = |+>, s(1) = |1>; negated: '+', '0'.
std::string not_s_of(unsigned n, uint64_t a) {
    std::string out;
    for (unsigned i = 1; i <= n; i++) {
        bool bit = (a >> (n - i)) & 1;
        out += bit ? '0' : '+';
    }
    return out;
}

// Ket string of s(a_i): '+' for 0, '1' for 1.
std::string s_of(unsigned n, uint64_t a) {
    std::string out;
    for (unsigned i = 1; i <= n; i++) {
        out += ((a >> (n - i)) & 1) ? '1' : '+';
    }
    return out;
}

std::string bits_of(unsigned n, uint64_t a) {
    std::string out;
    for (unsigned i = 1; i <= n; i++) {
        out += ((a >> (n - i)) & 1) ? '1' : '0';
    }
    return out;
}

}  // namespace

TEST(algorithm, check_promise_examples) {
    EXPECT_EQ(check_promise(BoolFn::constant_false(2)), 0u);
    EXPECT_EQ(check_promise(BoolFn::point(3, 5)), 1u);
    BoolFn two = BoolFn::parse_table("2:1100");
    EXPECT_EQ(check_promise(two), 2u);
    try {
        run_unique_sat(two);
        FAIL() << "expected PromiseViolated";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::PromiseViolated);
    }
}

TEST(algorithm, skip_promise_check_reports_raw_support) {
    BoolFn two = BoolFn::parse_table("2:1100");
    RunOptions o;
    o.skip_promise_check = true;
    RunResult r = run_unique_sat(two, o);
    EXPECT_FALSE(r.verdict.has_value());
    EXPECT_EQ(r.sat_count, 2u);
    std::vector<bool> table{true, true, false, false};
    EXPECT_EQ(as_set(r.final_support), reference_circuit(table, 2).back());
    RunResult sampled = run_unique_sat_sampled(two, 4, o);
    EXPECT_FALSE(sampled.verdict.has_value());
    ASSERT_TRUE(sampled.outcome.has_value());
}

TEST(algorithm, unsatisfiable_example) {
    for (Backend b : kBackends) {
        RunResult r = run_unique_sat(BoolFn::constant_false(2), with_backend(b, true));
        EXPECT_EQ(r.verdict, Verdict::unsat);
        EXPECT_EQ(r.final_support, (std::vector<BasisIndex>{0}));
        EXPECT_EQ(r.trace->steps.back().state.str(), "|000⟩");
        EXPECT_EQ(r.sat_count, 0u);
    }
}

TEST(algorithm, point_function_example) {
    // |+>|not(s(a))> + |0>|00> with a = (1,0), expanded and cancelled.
    IndexSet closed_form = symmetric_difference(expand_product("+" + not_s_of(2, 0b10)), {0});
    IndexSet stepwise = reference_circuit(point_table(2, 0b10), 2).back();
    ASSERT_EQ(closed_form, stepwise);
    ASSERT_EQ(as_vector(closed_form), (std::vector<uint64_t>{1, 4, 5}));
    for (Backend b : kBackends) {
        RunResult r = run_unique_sat(BoolFn::point(2, 0b10), with_backend(b, true));
        EXPECT_EQ(r.verdict, Verdict::sat);
        EXPECT_EQ(as_set(r.final_support), closed_form);
        EXPECT_EQ(r.trace->steps.back().state.str(), "|001⟩ + |100⟩ + |101⟩");
    }
}

TEST(algorithm, identity_function_example) {
    IndexSet stepwise = reference_circuit({false, true}, 1).back();
    ASSERT_EQ(as_vector(stepwise), (std::vector<uint64_t>{2}));
    for (Backend b : kBackends) {
        RunResult r = run_unique_sat(BoolFn::parse_table("1:01"), with_backend(b));
        EXPECT_EQ(r.verdict, Verdict::sat);
        EXPECT_EQ(r.final_support, (std::vector<BasisIndex>{2}));
        EXPECT_FALSE(r.trace.has_value());
        EXPECT_FALSE(r.outcome.has_value());
    }
}

TEST(algorithm, sampled_examples) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        RunResult r = run_unique_sat_sampled(BoolFn::constant_false(3), seed);
        EXPECT_EQ(r.outcome->index, 0u);
        EXPECT_EQ(r.verdict, Verdict::unsat);
    }
    std::set<uint64_t> seen;
    for (uint64_t seed = 0; seed < 100; seed++) {
        RunResult r = run_unique_sat_sampled(BoolFn::point(2, 0b10), seed);
        EXPECT_EQ(r.verdict, Verdict::sat);
        seen.insert(r.outcome->index);
    }
    for (uint64_t k : seen) {
        EXPECT_TRUE(k == 1 || k == 4 || k == 5);
    }
    for (uint64_t seed = 0; seed < 20; seed++) {
        RunResult r = run_unique_sat_sampled(BoolFn::parse_table("1:01"), seed);
        EXPECT_EQ(r.outcome->index, 2u);
        EXPECT_EQ(r.verdict, Verdict::sat);
    }
}

TEST(algorithm, trace_labels_and_unsat_walkthrough) {
    Trace t = trace(BoolFn::constant_false(2));
    ASSERT_EQ(t.steps.size(), 8u);
    for (size_t k = 0; k < 8; k++) {
        EXPECT_EQ(t.steps[k].label, kStepLabels[k]);
        EXPECT_EQ(t.steps[k].state.num_qubits(), 3u);
    }
    EXPECT_EQ(as_set(t.steps[0].state.support()), expand_product("000"));
    EXPECT_EQ(as_set(t.steps[1].state.support()), expand_product("0++"));
    EXPECT_EQ(as_set(t.steps[2].state.support()), expand_product("0++"));
    for (size_t k = 3; k < 8; k++) {
        EXPECT_EQ(t.steps[k].state.str(), "|000⟩");
    }
}

TEST(algorithm, trace_sat_walkthrough) {
    const uint64_t a = 0b10;
    Trace t = trace(BoolFn::point(2, a));
    // step 3: |+>|a> + |0>|++>
    EXPECT_EQ(
        as_set(t.steps[2].state.support()),
        symmetric_difference(expand_product("+" + bits_of(2, a)), expand_product("0++")));
    EXPECT_EQ(t.steps[2].state.support().size(), 4u);
    // step 5: |1>|s(a)> + |0>|00>
    EXPECT_EQ(
        as_set(t.steps[4].state.support()), symmetric_difference(expand_product("1" + s_of(2, a)), expand_product("000")));
    // step 7: |+>|not(s(a))> + |0>|00>
    EXPECT_EQ(
        as_set(t.steps[6].state.support()),
        symmetric_difference(expand_product("+" + not_s_of(2, a)), expand_product("000")));
}

TEST(algorithm, trace_matches_reference_model) {
    for (unsigned n = 1; n <= 4; n++) {
        for (int64_t a = -1; a < (int64_t{1} << n); a++) {
            BoolFn f = a < 0 ? BoolFn::constant_false(n) : BoolFn::point(n, a);
            std::vector<bool> table(uint64_t{1} << n, false);
            if (a >= 0) {
                table[a] = true;
            }
            auto expected = reference_circuit(table, n);
            for (Backend b : kBackends) {
                Trace t = trace(f, b);
                for (size_t k = 0; k < 8; k++) {
                    EXPECT_EQ(as_set(t.steps[k].state.support()), expected[k]) << "n=" << n << " a=" << a << " step " << k;
                }
            }
        }
    }
}

TEST(algorithm, exhaustive_small_arity) {
    for (unsigned n = 1; n <= 4; n++) {
        RunResult unsat = run_unique_sat(BoolFn::constant_false(n));
        EXPECT_EQ(unsat.verdict, Verdict::unsat);
        EXPECT_EQ(unsat.final_support, (std::vector<BasisIndex>{0}));
        for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
            BoolFn f = BoolFn::point(n, a);
            RunResult r = run_unique_sat(f);
            EXPECT_EQ(r.verdict, count_sat(f) ? Verdict::sat : Verdict::unsat);
            EXPECT_NE(r.final_support.front(), 0u);
        }
    }
}

TEST(algorithm, case_two_final_state_structure) {
    for (unsigned n = 1; n <= 8; n++) {
        for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
            IndexSet product = expand_product("+" + not_s_of(n, a));
            // Every mix of |+> and |0> expands to a sum containing |0...0> once.
            ASSERT_EQ(product.count(0), 1u);
            IndexSet expected = symmetric_difference(product, {0});
            RunResult r = run_unique_sat(BoolFn::point(n, a));
            ASSERT_EQ(as_set(r.final_support), expected) << "n=" << n << " a=" << a;
        }
    }
}

TEST(algorithm, random_point_functions) {
    std::mt19937_64 rng(37);
    for (unsigned n = 5; n <= 12; n++) {
        for (int k = 0; k < 100; k++) {
            uint64_t a = rng() & ((uint64_t{1} << n) - 1);
            RunResult r = run_unique_sat(BoolFn::point(n, a), with_backend(k % 2 ? Backend::sparse : Backend::dense));
            EXPECT_EQ(r.verdict, Verdict::sat);
            EXPECT_NE(r.final_support.front(), 0u);
        }
    }
}

TEST(algorithm, constant_depth_gate_counts) {
    for (unsigned n = 1; n <= 16; n++) {
        RunResult r = run_unique_sat(BoolFn::point(n, 0));
        EXPECT_EQ(r.stats.single_qubit_gates, 2 * n + 2);
        EXPECT_EQ(r.stats.oracle_calls, 1u);
        EXPECT_EQ(r.stats.fanout_cnots, 1u);
    }
}

TEST(algorithm, sampled_and_support_verdicts_agree) {
    for (unsigned n = 1; n <= 4; n++) {
        for (int64_t a = -1; a < (int64_t{1} << n); a++) {
            BoolFn f = a < 0 ? BoolFn::constant_false(n) : BoolFn::point(n, a);
            RunResult full = run_unique_sat(f);
            for (uint64_t seed = 0; seed < 30; seed++) {
                RunResult one = run_unique_sat_sampled(f, seed);
                EXPECT_EQ(one.verdict, full.verdict);
                EXPECT_TRUE(std::binary_search(full.final_support.begin(), full.final_support.end(), one.outcome->index));
            }
        }
    }
}
