// Copyright 2026 The pmgraph Authors
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

#include <string>
#include <vector>

namespace pmgraph::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
  kScaleLimit = 3,
};

/// Outcome of one command. On failure `err` starts with
/// "error: <reason_code>: " on a single line.
struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name).
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace pmgraph::cli
