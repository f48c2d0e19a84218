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

#include "modalq/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "modalq/algorithm.h"
#include "modalq/dimacs.h"
#include "modalq/error.h"
#include "modalq/ops.h"
#include "modalq/report.h"

namespace modalq {

namespace {

constexpr size_t kTextListLimit = 64;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string table;
    std::string backend;
    std::string mode = "support";
    std::optional<uint64_t> seed;
    std::string format = "text";
    bool skip_promise_check = false;
    bool lenient = false;
};

struct VerifyConfig {
    unsigned n_max = 4;
    unsigned random_per_n = 100;
    uint64_t seed = 0;
    std::string backend;
    std::string format = "text";
};

struct BenchConfig {
    std::vector<unsigned> n_list{8, 12, 16};
    std::string backend = "both";
    unsigned reps = 1;
    uint64_t seed = 0;
    std::string format = "text";
};

Backend resolve_backend(const std::string &flag) {
    std::string name = flag;
    if (name.empty()) {
        const char *env = std::getenv("MODALQ_BACKEND");
        name = env && *env ? env : "dense";
    }
    try {
        return parse_backend(name);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

BoolFn load_function(const RunConfig &cfg) {
    if (cfg.input.empty() == cfg.table.empty()) {
        throw UsageError("give exactly one of a DIMACS file or --table n:bits");
    }
    if (!cfg.table.empty()) {
        return BoolFn::parse_table(cfg.table);
    }
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + cfg.input + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    try {
        return boolfn_from_cnf(parse_dimacs(text, DimacsOptions{cfg.lenient}));
    } catch (const ParseError &e) {
        throw UsageError(cfg.input + ":" + e.diagnostic().str());
    }
}

std::string join_indices(const std::vector<BasisIndex> &v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size() && i < kTextListLimit; i++) {
        if (i) {
            out += ", ";
        }
        out += std::to_string(v[i]);
    }
    if (v.size() > kTextListLimit) {
        out += ", ... (" + std::to_string(v.size()) + " total)";
    }
    return out + "]";
}

std::string render_support(unsigned num_qubits, const std::vector<BasisIndex> &support) {
    if (support.size() > kTextListLimit) {
        return "(" + std::to_string(support.size()) + " basis states)";
    }
    return Vector::from_support(num_qubits, support, Backend::sparse).str();
}

void check_format(const std::string &format) {
    if (format != "text" && format != "json") {
        throw UsageError("--format must be text or json");
    }
}

RunResult execute(const RunConfig &cfg, bool capture_trace) {
    check_format(cfg.format);
    if (cfg.mode != "support" && cfg.mode != "sample") {
        throw UsageError("--mode must be support or sample");
    }
    if (cfg.mode == "support" && cfg.seed) {
        throw UsageError("--seed is only meaningful with --mode sample");
    }
    if (cfg.mode == "sample" && !cfg.seed) {
        throw UsageError("--mode sample requires --seed");
    }
    RunOptions options;
    options.backend = resolve_backend(cfg.backend);
    options.skip_promise_check = cfg.skip_promise_check;
    options.capture_trace = capture_trace;
    BoolFn f = load_function(cfg);
    if (cfg.mode == "sample") {
        return run_unique_sat_sampled(f, *cfg.seed, options);
    }
    return run_unique_sat(f, options);
}

void print_verdict_text(const RunResult &r, std::ostream &out) {
    if (r.verdict) {
        out << "verdict: " << verdict_name(*r.verdict) << "\n";
    } else {
        out << "verdict: none (promise violated, raw support only)\n";
    }
    out << "sat_count: " << r.sat_count << "\n";
    out << "support: " << join_indices(r.final_support) << "\n";
    out << "final: " << render_support(r.n + 1, r.final_support) << "\n";
    if (r.outcome) {
        out << "outcome: " << r.outcome->index << " "
            << Vector::basis(FieldSpec::gf2(), r.n + 1, r.outcome->index, Backend::sparse).str() << "\n";
    }
}

int cmd_solve(const RunConfig &cfg, std::ostream &out) {
    RunResult r = execute(cfg, false);
    if (cfg.format == "json") {
        out << run_result_json(r).dump(2) << "\n";
    } else {
        print_verdict_text(r, out);
    }
    return kExitOk;
}

int cmd_trace(const RunConfig &cfg, std::ostream &out) {
    RunResult r = execute(cfg, true);
    if (cfg.format == "json") {
        out << run_result_json(r).dump(2) << "\n";
        return kExitOk;
    }
    out << "step  label     state\n";
    size_t k = 1;
    for (const auto &step : r.trace->steps) {
        out << std::left << std::setw(6) << k++ << std::setw(10) << step.label << step.state.str() << "\n";
    }
    print_verdict_text(r, out);
    return kExitOk;
}

struct VerifyRow {
    unsigned n;
    std::string kind;
    uint64_t instances = 0;
    uint64_t failures = 0;
};

bool instance_ok(const BoolFn &f, Backend backend) {
    RunOptions options;
    options.backend = backend;
    RunResult r = run_unique_sat(f, options);
    uint64_t truth = count_sat(f);
    Verdict expected = truth == 0 ? Verdict::unsat : Verdict::sat;
    if (!r.verdict || *r.verdict != expected) {
        return false;
    }
    bool zero_only = r.final_support.size() == 1 && r.final_support[0] == 0;
    bool has_zero = std::find(r.final_support.begin(), r.final_support.end(), 0) != r.final_support.end();
    return expected == Verdict::unsat ? zero_only : !has_zero;
}

/// Runs every instance, possibly in parallel; results are indexed so output
/// order does not depend on scheduling.
std::vector<char> run_instances(const std::vector<BoolFn> &fns, Backend backend) {
    std::vector<char> ok(fns.size(), 0);
    size_t workers = std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), fns.size()));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < fns.size(); i += workers) {
                    ok[i] = instance_ok(fns[i], backend);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return ok;
}

int cmd_verify(const VerifyConfig &cfg, std::ostream &out, std::ostream &err) {
    check_format(cfg.format);
    if (cfg.n_max < 1 || cfg.n_max > kMaxArity) {
        throw UsageError("--n-max must be in 1.." + std::to_string(kMaxArity));
    }
    Backend backend = resolve_backend(cfg.backend);
    std::mt19937_64 rng(cfg.seed);
    std::vector<VerifyRow> rows;
    for (unsigned n = 1; n <= cfg.n_max; n++) {
        std::vector<BoolFn> fns;
        VerifyRow row{n, n <= 4 ? "exhaustive" : "random"};
        if (n <= 4) {
            fns.push_back(BoolFn::constant_false(n));
            for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
                fns.push_back(BoolFn::point(n, a));
            }
        } else {
            std::uniform_int_distribution<uint64_t> pick(0, (uint64_t{1} << n) - 1);
            for (unsigned k = 0; k < cfg.random_per_n; k++) {
                fns.push_back(BoolFn::point(n, pick(rng)));
            }
        }
        auto ok = run_instances(fns, backend);
        row.instances = fns.size();
        row.failures = std::count(ok.begin(), ok.end(), 0);
        rows.push_back(row);
    }
    uint64_t total = 0;
    uint64_t failures = 0;
    for (const auto &r : rows) {
        total += r.instances;
        failures += r.failures;
    }
    if (cfg.format == "json") {
        Json j;
        j["n_max"] = cfg.n_max;
        j["random_per_n"] = cfg.random_per_n;
        j["seed"] = cfg.seed;
        j["backend"] = backend_name(backend);
        Json jrows = Json::array();
        for (const auto &r : rows) {
            jrows.push_back(Json{
                {"n", r.n},
                {"kind", r.kind},
                {"instances", r.instances},
                {"passed", r.instances - r.failures},
                {"failed", r.failures}});
        }
        j["rows"] = std::move(jrows);
        j["total"] = total;
        j["failures"] = failures;
        out << j.dump(2) << "\n";
    } else {
        out << "n   kind        instances  passed  failed\n";
        for (const auto &r : rows) {
            out << std::left << std::setw(4) << r.n << std::setw(12) << r.kind << std::setw(11) << r.instances
                << std::setw(8) << (r.instances - r.failures) << r.failures << "\n";
        }
        out << "total: " << total << " instances, " << failures << " failures\n";
    }
    if (failures) {
        err << "verify: " << failures << " instance(s) disagree with brute-force ground truth\n";
        return kExitError;
    }
    return kExitOk;
}

int cmd_gates(const std::string &format, std::ostream &out) {
    check_format(format);
    MapCensus census = enumerate_1q_maps();
    if (format == "json") {
        Json j;
        j["field"] = FieldSpec::gf2().name();
        j["total"] = census.invertible.size() + census.non_invertible.size();
        Json inv = Json::array();
        for (const auto &g : census.invertible) {
            inv.push_back(gate_json(g));
        }
        Json sing = Json::array();
        for (const auto &g : census.non_invertible) {
            sing.push_back(gate_json(g));
        }
        j["invertible"] = std::move(inv);
        j["non_invertible"] = std::move(sing);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    auto print = [&](const std::vector<Gate2> &gates) {
        for (const auto &g : gates) {
            auto name = gate_identity(g);
            out << "  " << std::left << std::setw(7) << (name ? std::string(named_gate_name(*name)) : "-")
                << std::setw(15) << g.str();
            bool first = true;
            for (const State &s : {ket0(), ket1(), ket_plus()}) {
                out << (first ? "" : "  ") << one_qubit_label(s.vector()) << " ↦ "
                    << one_qubit_label(apply_single_raw(g, 0, s.vector()));
                first = false;
            }
            out << "\n";
        }
    };
    out << "linear maps on one GF(2) qubit: " << census.invertible.size() + census.non_invertible.size() << "\n";
    out << "invertible: " << census.invertible.size() << "\n";
    print(census.invertible);
    out << "non-invertible: " << census.non_invertible.size() << "\n";
    print(census.non_invertible);
    return kExitOk;
}

int cmd_bench(const BenchConfig &cfg, std::ostream &out, std::ostream &err) {
    check_format(cfg.format);
    std::vector<Backend> backends;
    if (cfg.backend == "both") {
        backends = {Backend::dense, Backend::sparse};
    } else {
        backends = {resolve_backend(cfg.backend)};
    }
    if (cfg.reps < 1) {
        throw UsageError("--reps must be positive");
    }
    for (unsigned n : cfg.n_list) {
        if (n < 1 || n > kMaxArity) {
            throw UsageError("benchmark sizes must be in 1.." + std::to_string(kMaxArity));
        }
    }
    struct Row {
        unsigned n;
        Backend backend;
        double seconds;
        Verdict verdict;
        size_t support_size;
    };
    std::vector<Row> rows;
    bool agree = true;
    std::mt19937_64 rng(cfg.seed);
    for (unsigned n : cfg.n_list) {
        std::uniform_int_distribution<uint64_t> pick(0, (uint64_t{1} << n) - 1);
        BoolFn f = BoolFn::point(n, pick(rng));
        std::optional<RunResult> reference;
        for (Backend b : backends) {
            RunOptions options;
            options.backend = b;
            RunResult r;
            auto start = std::chrono::steady_clock::now();
            for (unsigned k = 0; k < cfg.reps; k++) {
                r = run_unique_sat(f, options);
            }
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            rows.push_back(Row{n, b, dt.count() / cfg.reps, *r.verdict, r.final_support.size()});
            if (!reference) {
                reference = r;
            } else if (reference->verdict != r.verdict || reference->final_support != r.final_support) {
                agree = false;
            }
        }
    }
    if (cfg.format == "json") {
        Json j;
        Json jrows = Json::array();
        for (const auto &r : rows) {
            jrows.push_back(Json{
                {"n", r.n},
                {"backend", backend_name(r.backend)},
                {"seconds", r.seconds},
                {"verdict", verdict_name(r.verdict)},
                {"support_size", r.support_size}});
        }
        j["rows"] = std::move(jrows);
        j["agree"] = agree;
        out << j.dump(2) << "\n";
    } else {
        out << "n   backend  seconds     verdict  support\n";
        for (const auto &r : rows) {
            std::ostringstream secs;
            secs << std::fixed << std::setprecision(6) << r.seconds;
            out << std::left << std::setw(4) << r.n << std::setw(9) << backend_name(r.backend) << std::setw(12)
                << secs.str() << std::setw(9) << verdict_name(r.verdict) << r.support_size << "\n";
        }
        out << "backends agree: " << (agree ? "yes" : "no") << "\n";
    }
    if (!agree) {
        err << "bench: backends disagree\n";
        return kExitError;
    }
    return kExitOk;
}

void add_run_options(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("input", cfg.input, "DIMACS CNF file");
    cmd->add_option("--table", cfg.table, "inline truth table n:bits (x ascending, x1 most significant)");
    cmd->add_option("--backend", cfg.backend, "dense or sparse (default: $MODALQ_BACKEND or dense)");
    cmd->add_option("--mode", cfg.mode, "support (default) or sample");
    cmd->add_option("--seed", cfg.seed, "measurement seed; required by --mode sample");
    cmd->add_option("--format", cfg.format, "text or json");
    cmd->add_flag("--skip-promise-check", cfg.skip_promise_check, "run even when f has several satisfying assignments");
    cmd->add_flag("--lenient", cfg.lenient, "tolerant DIMACS parsing");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Modal quantum theory simulator: UNIQUE-SAT over GF(2)", "modalq"};
    app.require_subcommand(1);

    RunConfig solve_cfg;
    RunConfig trace_cfg;
    VerifyConfig verify_cfg;
    BenchConfig bench_cfg;
    std::string gates_format = "text";

    auto *solve = app.add_subcommand("solve", "decide a promise instance");
    add_run_options(solve, solve_cfg);
    auto *tr = app.add_subcommand("trace", "print the eight intermediate states");
    add_run_options(tr, trace_cfg);

    auto *verify = app.add_subcommand("verify", "check the circuit against brute force");
    verify->add_option("--n-max", verify_cfg.n_max, "largest arity (exhaustive up to 4, random above)");
    verify->add_option("--random", verify_cfg.random_per_n, "random point functions per arity above 4");
    verify->add_option("--seed", verify_cfg.seed, "seed for the random point functions");
    verify->add_option("--backend", verify_cfg.backend, "dense or sparse");
    verify->add_option("--format", verify_cfg.format, "text or json");

    auto *gates = app.add_subcommand("gates", "census of the 16 one-qubit linear maps");
    gates->add_option("--format", gates_format, "text or json");

    auto *bench = app.add_subcommand("bench", "time full runs per backend");
    bench->add_option("--n", bench_cfg.n_list, "arities, comma separated")->delimiter(',');
    bench->add_option("--backend", bench_cfg.backend, "dense, sparse or both");
    bench->add_option("--reps", bench_cfg.reps, "runs per timing");
    bench->add_option("--seed", bench_cfg.seed, "seed for the benchmark point functions");
    bench->add_option("--format", bench_cfg.format, "text or json");

    std::vector<const char *> argv{"modalq"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(solve_cfg, out);
        }
        if (tr->parsed()) {
            return cmd_trace(trace_cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_cfg, out, err);
        }
        if (gates->parsed()) {
            return cmd_gates(gates_format, out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_cfg, out, err);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::PromiseViolated ? kExitPromiseViolated : kExitError;
    }
    return kExitError;
}

}  // namespace modalq
