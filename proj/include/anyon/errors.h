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

#ifndef ANYON_ERRORS_H
#define ANYON_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anyon {

/// Bad user input: unknown labels, malformed words, violated preconditions.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A braid word that failed to parse. `offset` is the byte offset of the offending token.
struct ParseError : InputError {
    ParseError(const std::string &msg, size_t offset)
        : InputError(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {
    }
    size_t offset;
};

/// An F or R table is missing an entry for an admissible index tuple.
struct CompletenessError : InputError {
    using InputError::InputError;
};

/// A configured size cap (state count, dimension, word length) would be exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative method failed to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace anyon

#endif
