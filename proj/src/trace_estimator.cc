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

#include "anyon/trace_estimator.h"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "anyon/errors.h"

namespace anyon {

namespace {

Matrix ordered_product(std::span<const Matrix> matrices) {
    if (matrices.empty()) {
        throw InputError("need at least one matrix");
    }
    Eigen::Index dim = matrices[0].rows();
    Matrix acc = Matrix::Identity(dim, dim);
    for (size_t i = 0; i < matrices.size(); i++) {
        const Matrix &m = matrices[i];
        if (m.rows() != dim || m.cols() != dim) {
            throw InputError(
                "matrix " + std::to_string(i) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
        }
        acc = acc * m;
    }
    return acc;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based stream for one shot.
class ShotRng {
   public:
    ShotRng(uint64_t seed, uint64_t shot) : state_(splitmix64(seed ^ splitmix64(shot))) {
    }
    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64(state_);
    }
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    size_t below(size_t n) {
        return static_cast<size_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

   private:
    uint64_t state_;
};

// +1 with probability (1 + bias) / 2.
int measure(ShotRng &rng, double bias) {
    return rng.uniform() < 0.5 * (1 + bias) ? 1 : -1;
}

double standard_error(int64_t sum, uint64_t n) {
    if (n < 2) {
        return 1;
    }
    double mean = static_cast<double>(sum) / n;
    // Outcomes are +-1, so the sum of squares is n.
    double var = (n - n * mean * mean) / (n - 1);
    return std::clamp(std::sqrt(std::max(0.0, var) / n), 0.0, 1.0);
}

}  // namespace

std::complex<double> exact_normalized_trace(std::span<const Matrix> matrices) {
    Matrix u = ordered_product(matrices);
    return u.trace() / static_cast<double>(u.rows());
}

TraceEstimate hadamard_test_trace(std::span<const Matrix> matrices, const HadamardTestOptions &options) {
    if (options.shots == 0) {
        throw InputError("shots must be at least 1");
    }
    if (!matrices.empty() && static_cast<size_t>(matrices[0].rows()) > options.dim_cap) {
        throw ResourceError(
            "dimension " + std::to_string(matrices[0].rows()) + " exceeds the cap " + std::to_string(options.dim_cap));
    }
    Matrix u = ordered_product(matrices);
    size_t dim = static_cast<size_t>(u.rows());
    if (options.basis_state && *options.basis_state >= dim) {
        throw InputError("basis state " + std::to_string(*options.basis_state) + " out of range");
    }
    std::vector<std::complex<double>> diag(dim);
    for (size_t s = 0; s < dim; s++) {
        diag[s] = u(s, s);
    }

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, options.shots));
    std::vector<int64_t> sum_x(threads, 0);
    std::vector<int64_t> sum_y(threads, 0);
    auto work = [&](unsigned t) {
        uint64_t begin = options.shots * t / threads;
        uint64_t end = options.shots * (t + 1) / threads;
        for (uint64_t shot = begin; shot < end; shot++) {
            ShotRng rng(options.seed, shot);
            size_t sx = options.basis_state ? *options.basis_state : rng.below(dim);
            sum_x[t] += measure(rng, diag[sx].real());
            size_t sy = options.basis_state ? *options.basis_state : rng.below(dim);
            sum_y[t] += measure(rng, diag[sy].imag());
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    int64_t x = 0;
    int64_t y = 0;
    for (unsigned t = 0; t < threads; t++) {
        x += sum_x[t];
        y += sum_y[t];
    }
    double n = static_cast<double>(options.shots);
    TraceEstimate est;
    est.value = {x / n, y / n};
    est.stderr_re = standard_error(x, options.shots);
    est.stderr_im = standard_error(y, options.shots);
    est.shots = options.shots;
    est.seed = options.seed;
    return est;
}

}  // namespace anyon
