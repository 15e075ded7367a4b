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

#ifndef ANYON_TRACE_ESTIMATOR_H
#define ANYON_TRACE_ESTIMATOR_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>

#include "anyon/braid.h"

namespace anyon {

struct TraceEstimate {
    std::complex<double> value;
    double stderr_re = 1;
    double stderr_im = 1;
    uint64_t shots = 0;
    uint64_t seed = 0;
};

/// Tr[M_1 M_2 ... M_k] / D.
std::complex<double> exact_normalized_trace(std::span<const Matrix> matrices);

inline constexpr size_t kDefaultTraceDimCap = size_t{1} << 10;

struct HadamardTestOptions {
    uint64_t shots = 1000;
    uint64_t seed = 0;
    /// Run the pure-state variant on this basis state instead of the mixed register.
    std::optional<size_t> basis_state;
    size_t dim_cap = kDefaultTraceDimCap;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 1;
};

/// Simulated Hadamard test on U = M_1 ... M_k. Every shot draws a register basis state
/// |s> and measures the work qubit once in the X basis and once in the Y basis, with
/// outcome biases Re<s|U|s> and Im<s|U|s>. Randomness is a pure function of
/// (seed, shot index), so results do not depend on the thread count.
TraceEstimate hadamard_test_trace(std::span<const Matrix> matrices, const HadamardTestOptions &options);

}  // namespace anyon

#endif
