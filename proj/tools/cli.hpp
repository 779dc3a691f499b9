// Copyright 2026 The bubblecalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bubblecalc::cli {

/// Exit codes: 0 all checks pass, 1 some check failed, 2 usage, input or bound error.
enum Exit { kOk = 0, kCheckFailed = 1, kError = 2 };

/// Runs one command line. Primary output goes to `out` (or the --out file),
/// diagnostics and wall time to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bubblecalc::cli
