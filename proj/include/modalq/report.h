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

#ifndef MODALQ_REPORT_H
#define MODALQ_REPORT_H

#include "json.hpp"
#include "modalq/algorithm.h"
#include "modalq/ops.h"

namespace modalq {

using Json = nlohmann::ordered_json;

/// {"n", "verdict", "sat_count", "support", "outcome", "trace"}; absent
/// optional parts serialize as null.
Json run_result_json(const RunResult &result);

/// {"matrix": [[a,b],[c,d]], "name": "S"|null, "action": {"|0⟩": "...", ...}}
Json gate_json(const Gate2 &g);

/// Name of a GF(2) gate among S, S_DAG, X, I, if any.
std::optional<NamedGate> gate_identity(const Gate2 &g);

}  // namespace modalq

#endif
