// Copyright 2026 The anyonkit Authors
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

#ifndef ANYON_TOOLS_CLI_H
#define ANYON_TOOLS_CLI_H

#include <span>
#include <string>
#include <vector>

#include "json_io.h"

namespace anyon::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kResourceError = 2,
    kInvariantError = 3,
};

struct CommandResult {
    int status = kOk;
    /// Null unless the command produced a document.
    io::Json payload;
    /// Help text on success, diagnostics on failure.
    std::string message;
};

/// Runs one subcommand. `args` excludes the program name.
CommandResult run(std::span<const std::string> args);

/// The exact text written to stdout for a result.
std::string render_stdout(const CommandResult &result);

/// Names of every subcommand, in help order.
std::vector<std::string> subcommands();

}  // namespace anyon::cli

#endif
