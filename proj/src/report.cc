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

#include "modalq/report.h"

namespace modalq {

Json run_result_json(const RunResult &result) {
    Json j;
    j["n"] = result.n;
    j["verdict"] = result.verdict ? Json(verdict_name(*result.verdict)) : Json(nullptr);
    j["sat_count"] = result.sat_count;
    j["support"] = result.final_support;
    j["outcome"] = result.outcome ? Json(result.outcome->index) : Json(nullptr);
    if (result.trace) {
        Json steps = Json::array();
        for (const auto &step : result.trace->steps) {
            steps.push_back(Json{{"label", step.label}, {"state", step.state.str()}});
        }
        j["trace"] = std::move(steps);
    } else {
        j["trace"] = nullptr;
    }
    return j;
}

std::optional<NamedGate> gate_identity(const Gate2 &g) {
    if (!g.field().is_gf2()) {
        return std::nullopt;
    }
    for (NamedGate name : {NamedGate::S, NamedGate::S_DAG, NamedGate::X, NamedGate::I}) {
        if (named_gate(name) == g) {
            return name;
        }
    }
    return std::nullopt;
}

Json gate_json(const Gate2 &g) {
    auto e = g.entries();
    Json j;
    j["matrix"] = {{e[0], e[1]}, {e[2], e[3]}};
    auto name = gate_identity(g);
    j["name"] = name ? Json(named_gate_name(*name)) : Json(nullptr);
    Json action = Json::object();
    for (const State &s : {ket0(), ket1(), ket_plus()}) {
        action[one_qubit_label(s.vector())] = one_qubit_label(apply_single_raw(g, 0, s.vector()));
    }
    j["action"] = std::move(action);
    return j;
}

}  // namespace modalq
