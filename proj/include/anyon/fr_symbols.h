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

#ifndef ANYON_FR_SYMBOLS_H
#define ANYON_FR_SYMBOLS_H

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anyon/anyon_model.h"

namespace anyon {

using Complex = std::complex<double>;

/// Index tuple (a, b, c, d, i, j) of the F-symbol F(abcd)^i_j.
using FIndex = std::array<Label, 6>;

/// Table of F-symbols F(abcd)^i_j for a model.
///
/// F(abcd)^i_j recouples the left tree (a b -> i, i c -> d) into the right tree
/// (b c -> j, a j -> d):
///
///     a   b   c          a   b   c
///      \ /   /            \   \ /
///       i   /     =  sum   \   j
///        \ /          j     \ /
///         d                  d
///
/// An entry may only be set when all four vertices are allowed fusions. For self-dual
/// labels this is the unordered-triple rule {abi}, {cdi}, {adj}, {cbj}.
class FSymbolTable {
   public:
    explicit FSymbolTable(AnyonModel model);

    /// A table with every admissible entry set to `value`.
    static FSymbolTable filled(const AnyonModel &model, Complex value);

    const AnyonModel &model() const {
        return model_;
    }
    static bool admissible(const AnyonModel &model, const FIndex &idx);
    bool admissible(const FIndex &idx) const {
        return admissible(model_, idx);
    }

    /// Throws InputError when `idx` is not admissible.
    void set(const FIndex &idx, Complex value);
    std::optional<Complex> get(const FIndex &idx) const;
    /// The stored value, or 0 for absent entries.
    Complex operator()(Label a, Label b, Label c, Label d, Label i, Label j) const {
        size_t n = model_.size();
        return values_[((((static_cast<size_t>(a) * n + b) * n + c) * n + d) * n + i) * n + j];
    }

    std::vector<FIndex> missing() const;
    /// Throws CompletenessError naming the first admissible tuple without a value.
    void require_complete() const;
    /// Stored entries in lexicographic index order.
    std::vector<std::pair<FIndex, Complex>> entries() const;

   private:
    size_t flat(const FIndex &idx) const;

    AnyonModel model_;
    std::vector<Complex> values_;
    std::vector<bool> present_;
};

/// Table of R-symbols R^{ab}_c: the phase acquired by a counterclockwise exchange of
/// a and b in fusion channel c.
class RSymbolTable {
   public:
    explicit RSymbolTable(AnyonModel model);
    static RSymbolTable filled(const AnyonModel &model, Complex value);

    const AnyonModel &model() const {
        return model_;
    }
    static bool admissible(const AnyonModel &model, Label a, Label b, Label c) {
        return model.N(a, b, c) > 0;
    }
    void set(Label a, Label b, Label c, Complex value);
    std::optional<Complex> get(Label a, Label b, Label c) const;
    Complex operator()(Label a, Label b, Label c) const {
        size_t n = model_.size();
        return values_[(static_cast<size_t>(a) * n + b) * n + c];
    }
    void require_complete() const;
    std::vector<std::pair<std::array<Label, 3>, Complex>> entries() const;

   private:
    size_t flat(Label a, Label b, Label c) const;

    AnyonModel model_;
    std::vector<Complex> values_;
    std::vector<bool> present_;
};

struct FibonacciData {
    AnyonModel model;
    FSymbolTable f;
    RSymbolTable r;
};

/// The Fibonacci solution: F(1111) = [[1/phi, 1/sqrt(phi)], [1/sqrt(phi), -1/phi]],
/// every entry with a vacuum leg equal to 1, R^{11}_0 = e^{4 pi i/5},
/// R^{11}_1 = -e^{2 pi i/5}, and R = 1 whenever a vacuum is involved.
FibonacciData fibonacci_data();

/// The 2x2 matrix F(1111)^i_j of the Fibonacci table.
std::array<std::array<Complex, 2>, 2> fibonacci_f_matrix(const FSymbolTable &f);

/// Which algebraic form of the consistency equations to evaluate.
enum class ConsistencyForm {
    /// Unoriented for self-dual models, oriented otherwise.
    automatic,
    /// sum_n F(mlkp)^q_n F(jimn)^p_s F(jslk)^n_r = F(jiqk)^p_r F(riml)^q_s and
    /// R^{mk}_r F(lmkj)^q_r R^{ml}_q = sum_p F(lkmj)^p_r R^{mp}_j F(mlkj)^q_p.
    /// Valid for self-dual labels only.
    unoriented,
    /// The standard oriented pentagon and hexagon; valid for any multiplicity-free model.
    oriented,
};

bool is_self_dual(const AnyonModel &model);

/// max |LHS - RHS| of the pentagon equation over every index assignment, treating
/// non-admissible F as 0. Throws CompletenessError for missing admissible entries.
double pentagon_residual(const FSymbolTable &f, ConsistencyForm form = ConsistencyForm::automatic);

/// max |LHS - RHS| of the hexagon equation over every index assignment.
double hexagon_residual(const FSymbolTable &f, const RSymbolTable &r, ConsistencyForm form = ConsistencyForm::automatic);

/// max over (a,b,c,d) of the max-entry norm of F(abcd) F(abcd)^dagger - 1.
double f_unitarity_residual(const FSymbolTable &f);

/// F'(abcd)^i_j = u(a,b,i) u(i,c,d) / (u(b,c,j) u(a,j,d)) F(abcd)^i_j.
FSymbolTable gauge_transform(const FSymbolTable &f, const std::function<Complex(Label, Label, Label)> &vertex_phase);

/// A non-negative half-integer, stored as twice its value.
struct HalfInteger {
    int twice;
    static HalfInteger parse(std::string_view text);
    double value() const {
        return twice / 2.0;
    }
    bool operator==(const HalfInteger &) const = default;
};

/// SU(2)_k branching rule: |j1-j2| <= j <= j1+j2, j1+j2+j integral, each spin at most
/// k/2, and j1+j2+j <= k.
bool su2k_admissible(HalfInteger j1, HalfInteger j2, HalfInteger j, int k);

}  // namespace anyon

#endif
