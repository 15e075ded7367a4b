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

#ifndef ANYON_ANYON_MODEL_H
#define ANYON_ANYON_MODEL_H

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anyon {

/// Index of a particle type inside an AnyonModel.
using Label = int;

/// One nonzero entry N^c_ab of a fusion tensor.
struct FusionRule {
    Label a;
    Label b;
    Label c;
    int multiplicity;
};

/// Finite set of particle types with a commutative fusion tensor N^c_ab.
///
/// The constructor checks that the vacuum acts as the identity, that fusion commutes,
/// and that every label annihilates with its dual. All operations on the model are
/// pure functions of it.
class AnyonModel {
   public:
    AnyonModel(std::vector<std::string> names, Label vacuum, std::vector<Label> dual, std::span<const FusionRule> rules);

    static AnyonModel fibonacci();
    /// Abelian Z_d: labels "0".."d-1" fusing by addition mod d.
    static AnyonModel cyclic(int d);
    /// Z_2 gauge theory anyons {1, e, m, em}.
    static AnyonModel toric();
    static AnyonModel trivial();
    /// Resolves "fibonacci", "z_d:<d>", "toric", "trivial".
    static AnyonModel named(std::string_view name);

    size_t size() const {
        return names_.size();
    }
    Label vacuum() const {
        return vacuum_;
    }
    Label dual(Label a) const;
    const std::string &name(Label a) const;
    const std::vector<std::string> &names() const {
        return names_;
    }
    /// Throws InputError for names not in the model.
    Label label(std::string_view name) const;
    /// Throws InputError if `a` is not an index of this model.
    void check(Label a) const;

    int N(Label a, Label b, Label c) const {
        return n_[(static_cast<size_t>(a) * size() + b) * size() + c];
    }
    std::vector<FusionRule> rules() const;

   private:
    std::vector<std::string> names_;
    Label vacuum_;
    std::vector<Label> dual_;
    std::vector<int> n_;
};

struct FusionChannel {
    Label label;
    int multiplicity;
    bool operator==(const FusionChannel &) const = default;
};

/// The channels c with N^c_ab > 0, in label order.
std::vector<FusionChannel> fuse(const AnyonModel &model, Label a, Label b);

/// Number of left-associated fusion trees with the given leaves and total charge.
///
/// Multiplicities count as distinct branches. Throws ResourceError on 64-bit overflow.
uint64_t fusion_space_dim(const AnyonModel &model, std::span<const Label> inputs, Label total);

/// A left-associated fusion tree: leaves 1 and 2 fuse to internal[0], which fuses with
/// leaf 3 to internal[1], and so on, the last vertex producing `total`.
struct FusionTree {
    std::vector<Label> leaves;
    std::vector<Label> internal;
    /// Which copy of the fusion channel is used at each of the leaves.size()-1 vertices.
    std::vector<int> copies;
    Label total;
    bool operator==(const FusionTree &) const = default;
};

/// True if every vertex of the tree is an allowed fusion and the shape is consistent.
bool is_valid_tree(const AnyonModel &model, const FusionTree &tree);

inline constexpr uint64_t kDefaultTreeCap = uint64_t{1} << 20;

/// All fusion trees, lexicographic in (internal, copies). Throws ResourceError when
/// the count exceeds `cap`.
std::vector<FusionTree> enumerate_fusion_trees(
    const AnyonModel &model, std::span<const Label> inputs, Label total, uint64_t cap = kDefaultTreeCap);

struct QuantumDimensionOptions {
    double tolerance = 1e-12;
    int max_iterations = 100000;
};

/// Positive solution of d_a d_b = sum_c N^c_ab d_c, indexed by label.
///
/// Power iteration on sum_a N_a from the all-ones vector, normalised so d_vacuum = 1.
std::vector<double> quantum_dimensions(const AnyonModel &model, QuantumDimensionOptions options = {});

/// max_{a,b} |d_a d_b - sum_c N^c_ab d_c|.
double product_rule_residual(const AnyonModel &model, std::span<const double> dims);

struct TotalDimension {
    double total;    // D = sqrt(sum d_j^2)
    double entropy;  // log_base D
};

TotalDimension total_dimension_entropy(const AnyonModel &model, double log_base = std::exp(1.0));

/// 1/d_a^2, the pair-annihilation probability of a with its dual.
double annihilation_probability(const AnyonModel &model, Label a);

struct Rational {
    int64_t num;
    int64_t den;
    bool operator==(const Rational &) const = default;
};

/// Composite-fermion exchange statistics 2j/(2jp+1), reduced. j = 0 gives 0/1.
Rational composite_fermion_statistics(int j, int p);

}  // namespace anyon

#endif
