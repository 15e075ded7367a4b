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

#include "anyon/anyon_model.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>

#include "anyon/errors.h"

namespace anyon {

AnyonModel::AnyonModel(
    std::vector<std::string> names, Label vacuum, std::vector<Label> dual, std::span<const FusionRule> rules)
    : names_(std::move(names)), vacuum_(vacuum), dual_(std::move(dual)) {
    size_t n = names_.size();
    if (n == 0) {
        throw InputError("anyon model needs at least one label");
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (names_[i] == names_[j]) {
                throw InputError("duplicate label '" + names_[i] + "'");
            }
        }
    }
    check(vacuum_);
    if (dual_.size() != n) {
        throw InputError("dual map must cover every label");
    }
    for (Label d : dual_) {
        check(d);
    }
    n_.assign(n * n * n, 0);
    for (const auto &r : rules) {
        check(r.a);
        check(r.b);
        check(r.c);
        if (r.multiplicity < 0) {
            throw InputError("negative fusion multiplicity");
        }
        n_[(static_cast<size_t>(r.a) * n + r.b) * n + r.c] = r.multiplicity;
    }

    for (Label a = 0; a < static_cast<Label>(n); a++) {
        for (Label c = 0; c < static_cast<Label>(n); c++) {
            int expected = a == c ? 1 : 0;
            if (N(vacuum_, a, c) != expected || N(a, vacuum_, c) != expected) {
                throw InputError("vacuum '" + names_[vacuum_] + "' does not act as identity on '" + names_[a] + "'");
            }
            for (Label b = 0; b < static_cast<Label>(n); b++) {
                if (N(a, b, c) != N(b, a, c)) {
                    throw InputError("fusion of '" + names_[a] + "' and '" + names_[b] + "' is not commutative");
                }
            }
        }
        if (N(a, dual_[a], vacuum_) < 1) {
            throw InputError("'" + names_[a] + "' does not annihilate with its dual");
        }
    }
}

AnyonModel AnyonModel::fibonacci() {
    std::vector<FusionRule> rules{{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
    return AnyonModel({"0", "1"}, 0, {0, 1}, rules);
}

AnyonModel AnyonModel::cyclic(int d) {
    if (d < 1) {
        throw InputError("z_d needs d >= 1");
    }
    std::vector<std::string> names;
    std::vector<Label> dual;
    std::vector<FusionRule> rules;
    for (int a = 0; a < d; a++) {
        names.push_back(std::to_string(a));
        dual.push_back((d - a) % d);
        for (int b = 0; b < d; b++) {
            rules.push_back({a, b, (a + b) % d, 1});
        }
    }
    return AnyonModel(std::move(names), 0, std::move(dual), rules);
}

AnyonModel AnyonModel::toric() {
    // Bit 0 = electric charge, bit 1 = magnetic flux.
    std::vector<FusionRule> rules;
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            rules.push_back({a, b, a ^ b, 1});
        }
    }
    return AnyonModel({"1", "e", "m", "em"}, 0, {0, 1, 2, 3}, rules);
}

AnyonModel AnyonModel::trivial() {
    std::vector<FusionRule> rules{{0, 0, 0, 1}};
    return AnyonModel({"1"}, 0, {0}, rules);
}

AnyonModel AnyonModel::named(std::string_view name) {
    if (name == "fibonacci") {
        return fibonacci();
    }
    if (name == "toric") {
        return toric();
    }
    if (name == "trivial") {
        return trivial();
    }
    constexpr std::string_view prefix = "z_d:";
    if (name.starts_with(prefix)) {
        auto digits = name.substr(prefix.size());
        int d = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && d >= 1 && d <= 1000) {
            return cyclic(d);
        }
    }
    throw InputError("unknown model '" + std::string(name) + "' (expected fibonacci, toric, trivial or z_d:<d>)");
}

Label AnyonModel::dual(Label a) const {
    check(a);
    return dual_[a];
}

const std::string &AnyonModel::name(Label a) const {
    check(a);
    return names_[a];
}

Label AnyonModel::label(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw InputError("unknown label '" + std::string(name) + "'");
    }
    return static_cast<Label>(it - names_.begin());
}

void AnyonModel::check(Label a) const {
    if (a < 0 || static_cast<size_t>(a) >= names_.size()) {
        throw InputError("label index " + std::to_string(a) + " out of range");
    }
}

std::vector<FusionRule> AnyonModel::rules() const {
    std::vector<FusionRule> out;
    Label n = static_cast<Label>(size());
    for (Label a = 0; a < n; a++) {
        for (Label b = 0; b < n; b++) {
            for (Label c = 0; c < n; c++) {
                if (int m = N(a, b, c)) {
                    out.push_back({a, b, c, m});
                }
            }
        }
    }
    return out;
}

std::vector<FusionChannel> fuse(const AnyonModel &model, Label a, Label b) {
    model.check(a);
    model.check(b);
    std::vector<FusionChannel> out;
    for (Label c = 0; c < static_cast<Label>(model.size()); c++) {
        if (int m = model.N(a, b, c)) {
            out.push_back({c, m});
        }
    }
    return out;
}

namespace {

uint64_t checked_mul_add(uint64_t acc, uint64_t x, uint64_t y) {
    uint64_t prod;
    if (__builtin_mul_overflow(x, y, &prod) || __builtin_add_overflow(acc, prod, &acc)) {
        throw ResourceError("fusion space dimension overflows 64 bits");
    }
    return acc;
}

void check_inputs(const AnyonModel &model, std::span<const Label> inputs, Label total) {
    if (inputs.empty()) {
        throw InputError("fusion needs at least one input label");
    }
    for (Label a : inputs) {
        model.check(a);
    }
    model.check(total);
}

// counts[k][x]: number of ways the first k+1 leaves fuse to x.
std::vector<std::vector<uint64_t>> forward_counts(const AnyonModel &model, std::span<const Label> inputs) {
    size_t n = model.size();
    std::vector<std::vector<uint64_t>> counts(inputs.size(), std::vector<uint64_t>(n, 0));
    counts[0][inputs[0]] = 1;
    for (size_t k = 1; k < inputs.size(); k++) {
        for (size_t x = 0; x < n; x++) {
            if (counts[k - 1][x] == 0) {
                continue;
            }
            for (size_t y = 0; y < n; y++) {
                if (int m = model.N(static_cast<Label>(x), inputs[k], static_cast<Label>(y))) {
                    counts[k][y] = checked_mul_add(counts[k][y], counts[k - 1][x], static_cast<uint64_t>(m));
                }
            }
        }
    }
    return counts;
}

}  // namespace

uint64_t fusion_space_dim(const AnyonModel &model, std::span<const Label> inputs, Label total) {
    check_inputs(model, inputs, total);
    return forward_counts(model, inputs).back()[total];
}

bool is_valid_tree(const AnyonModel &model, const FusionTree &tree) {
    size_t k = tree.leaves.size();
    if (k == 0) {
        return false;
    }
    if (k == 1) {
        return tree.internal.empty() && tree.copies.empty() && tree.leaves[0] == tree.total;
    }
    if (tree.internal.size() != k - 2 || tree.copies.size() != k - 1) {
        return false;
    }
    Label acc = tree.leaves[0];
    for (size_t v = 0; v + 1 < k; v++) {
        Label out = v + 2 < k ? tree.internal[v] : tree.total;
        int m = model.N(acc, tree.leaves[v + 1], out);
        if (m <= 0 || tree.copies[v] < 0 || tree.copies[v] >= m) {
            return false;
        }
        acc = out;
    }
    return true;
}

std::vector<FusionTree> enumerate_fusion_trees(
    const AnyonModel &model, std::span<const Label> inputs, Label total, uint64_t cap) {
    check_inputs(model, inputs, total);
    uint64_t count = fusion_space_dim(model, inputs, total);
    if (count > cap) {
        throw ResourceError(
            "fusion tree count " + std::to_string(count) + " exceeds cap " + std::to_string(cap));
    }

    size_t k = inputs.size();
    size_t n = model.size();
    std::vector<FusionTree> out;
    out.reserve(count);
    if (k == 1) {
        if (inputs[0] == total) {
            out.push_back({{inputs[0]}, {}, {}, total});
        }
        return out;
    }

    // reach[v][x]: intermediate x after vertex v can still end at `total`.
    std::vector<std::vector<bool>> reach(k - 1, std::vector<bool>(n, false));
    reach[k - 2][total] = true;
    for (size_t v = k - 2; v-- > 0;) {
        for (size_t x = 0; x < n; x++) {
            for (size_t y = 0; y < n && !reach[v][x]; y++) {
                reach[v][x] = reach[v + 1][y] && model.N(static_cast<Label>(x), inputs[v + 2], static_cast<Label>(y)) > 0;
            }
        }
    }

    FusionTree tree{{inputs.begin(), inputs.end()}, std::vector<Label>(k - 2), std::vector<int>(k - 1), total};
    // Depth-first over vertices; labels and copies in ascending order give lexicographic output.
    auto recurse = [&](auto &self, size_t v, Label acc) -> void {
        if (v == k - 1) {
            out.push_back(tree);
            return;
        }
        for (size_t y = 0; y < n; y++) {
            if (!reach[v][y]) {
                continue;
            }
            int m = model.N(acc, inputs[v + 1], static_cast<Label>(y));
            if (v + 2 < k) {
                tree.internal[v] = static_cast<Label>(y);
            }
            for (int c = 0; c < m; c++) {
                tree.copies[v] = c;
                self(self, v + 1, static_cast<Label>(y));
            }
        }
    };
    recurse(recurse, 0, inputs[0]);
    return out;
}

std::vector<double> quantum_dimensions(const AnyonModel &model, QuantumDimensionOptions options) {
    size_t n = model.size();
    // M = sum_a N_a; its Perron vector is the common positive eigenvector of every N_a.
    std::vector<double> m(n * n, 0.0);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            for (size_t c = 0; c < n; c++) {
                m[b * n + c] += model.N(static_cast<Label>(a), static_cast<Label>(b), static_cast<Label>(c));
            }
        }
    }

    std::vector<bool> seen(n, false);
    std::deque<size_t> queue{static_cast<size_t>(model.vacuum())};
    seen[model.vacuum()] = true;
    while (!queue.empty()) {
        size_t b = queue.front();
        queue.pop_front();
        for (size_t c = 0; c < n; c++) {
            if (!seen[c] && m[b * n + c] > 0) {
                seen[c] = true;
                queue.push_back(c);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InputError("fusion graph is not connected; quantum dimensions are not determined");
    }

    std::vector<double> d(n, 1.0);
    std::vector<double> next(n);
    Label vac = model.vacuum();
    for (int it = 0; it < options.max_iterations; it++) {
        for (size_t b = 0; b < n; b++) {
            double s = 0;
            for (size_t c = 0; c < n; c++) {
                s += m[b * n + c] * d[c];
            }
            next[b] = s;
        }
        double scale = next[vac];
        double delta = 0;
        for (size_t b = 0; b < n; b++) {
            next[b] /= scale;
            delta = std::max(delta, std::abs(next[b] - d[b]));
        }
        d.swap(next);
        if (delta < options.tolerance) {
            d[vac] = 1.0;
            return d;
        }
    }
    throw NumericError("quantum dimensions did not converge in " + std::to_string(options.max_iterations) + " iterations");
}

double product_rule_residual(const AnyonModel &model, std::span<const double> dims) {
    Label n = static_cast<Label>(model.size());
    double worst = 0;
    for (Label a = 0; a < n; a++) {
        for (Label b = 0; b < n; b++) {
            double rhs = 0;
            for (Label c = 0; c < n; c++) {
                rhs += model.N(a, b, c) * dims[c];
            }
            worst = std::max(worst, std::abs(dims[a] * dims[b] - rhs));
        }
    }
    return worst;
}

TotalDimension total_dimension_entropy(const AnyonModel &model, double log_base) {
    if (!(log_base > 0) || log_base == 1.0) {
        throw InputError("logarithm base must be positive and not 1");
    }
    double sum = 0;
    for (double x : quantum_dimensions(model)) {
        sum += x * x;
    }
    double total = std::sqrt(sum);
    return {total, std::log(total) / std::log(log_base)};
}

double annihilation_probability(const AnyonModel &model, Label a) {
    model.check(a);
    double d = quantum_dimensions(model)[a];
    return 1.0 / (d * d);
}

Rational composite_fermion_statistics(int j, int p) {
    if (j < 0 || p < 1) {
        throw InputError("composite fermion statistics needs j >= 0 and p >= 1");
    }
    if (j == 0) {
        return {0, 1};
    }
    int64_t num = 2 * int64_t{j};
    int64_t den = 2 * int64_t{j} * p + 1;
    int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace anyon
