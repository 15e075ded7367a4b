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

#include <iostream>
#include <string>
#include <vector>

#include "cli.h"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    anyon::cli::CommandResult result = anyon::cli::run(args);
    std::cout << anyon::cli::render_stdout(result);
    if (result.status != anyon::cli::kOk && !result.message.empty()) {
        std::cerr << result.message;
        if (result.message.back() != '\n') {
            std::cerr << '\n';
        }
    }
    return result.status;
}
