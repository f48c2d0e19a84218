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

#ifndef MODALQ_CLI_H
#define MODALQ_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace modalq {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
    kExitOk = 0,
    kExitError = 1,
    kExitPromiseViolated = 2,
};

/// Runs the `modalq` command line. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace modalq

#endif
