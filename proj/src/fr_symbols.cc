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

#include "anyon/fr_symbols.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "anyon/errors.h"

namespace anyon {

namespace {

std::string describe(const AnyonModel &model, std::span<const Label> idx) {
    std::string s = "(";
    for (size_t k = 0; k < idx.size(); k++) {
        s += (k ? "," : "") + model.name(idx[k]);
    }
    return s + ")";
}

void check_table_size(const AnyonModel &model) {
    if (model.size() > 16) {
        throw ResourceError("F tables are limited to models with at most 16 labels");
    }
}

}  // namespace

FSymbolTable::FSymbolTable(AnyonModel model) : model_(std::move(model)) {
    check_table_size(model_);
    size_t n = model_.size();
    size_t total = n * n * n * n * n * n;
    values_.assign(total, Complex{0, 0});
    present_.assign(total, false);
}

FSymbolTable FSymbolTable::filled(const AnyonModel &model, Complex value) {
    FSymbolTable table(model);
    Label n = static_cast<Label>(model.size());
    FIndex idx;
    for (idx[0] = 0; idx[0] < n; idx[0]++)
        for (idx[1] = 0; idx[1] < n; idx[1]++)
            for (idx[2] = 0; idx[2] < n; idx[2]++)
                for (idx[3] = 0; idx[3] < n; idx[3]++)
                    for (idx[4] = 0; idx[4] < n; idx[4]++)
                        for (idx[5] = 0; idx[5] < n; idx[5]++)
                            if (admissible(model, idx)) {
                                table.set(idx, value);
                            }
    return table;
}

bool FSymbolTable::admissible(const AnyonModel &model, const FIndex &idx) {
    auto [a, b, c, d, i, j] = idx;
    return model.N(a, b, i) > 0 && model.N(i, c, d) > 0 && model.N(b, c, j) > 0 && model.N(a, j, d) > 0;
}

size_t FSymbolTable::flat(const FIndex &idx) const {
    size_t n = model_.size();
    size_t k = 0;
    for (Label x : idx) {
        model_.check(x);
        k = k * n + static_cast<size_t>(x);
    }
    return k;
}

void FSymbolTable::set(const FIndex &idx, Complex value) {
    if (!admissible(idx)) {
        throw InputError("F" + describe(model_, idx) + " is not an admissible index tuple");
    }
    size_t k = flat(idx);
    values_[k] = value;
    present_[k] = true;
}

std::optional<Complex> FSymbolTable::get(const FIndex &idx) const {
    size_t k = flat(idx);
    if (!present_[k]) {
        return std::nullopt;
    }
    return values_[k];
}

std::vector<FIndex> FSymbolTable::missing() const {
    std::vector<FIndex> out;
    Label n = static_cast<Label>(model_.size());
    FIndex idx;
    for (idx[0] = 0; idx[0] < n; idx[0]++)
        for (idx[1] = 0; idx[1] < n; idx[1]++)
            for (idx[2] = 0; idx[2] < n; idx[2]++)
                for (idx[3] = 0; idx[3] < n; idx[3]++)
                    for (idx[4] = 0; idx[4] < n; idx[4]++)
                        for (idx[5] = 0; idx[5] < n; idx[5]++)
                            if (admissible(idx) && !present_[flat(idx)]) {
                                out.push_back(idx);
                            }
    return out;
}

void FSymbolTable::require_complete() const {
    auto gaps = missing();
    if (!gaps.empty()) {
        throw CompletenessError("F table has no entry for admissible tuple F" + describe(model_, gaps.front()));
    }
}

std::vector<std::pair<FIndex, Complex>> FSymbolTable::entries() const {
    std::vector<std::pair<FIndex, Complex>> out;
    size_t n = model_.size();
    for (size_t k = 0; k < values_.size(); k++) {
        if (!present_[k]) {
            continue;
        }
        FIndex idx;
        size_t rest = k;
        for (size_t p = 6; p-- > 0;) {
            idx[p] = static_cast<Label>(rest % n);
            rest /= n;
        }
        out.emplace_back(idx, values_[k]);
    }
    return out;
}

RSymbolTable::RSymbolTable(AnyonModel model) : model_(std::move(model)) {
    check_table_size(model_);
    size_t n = model_.size();
    values_.assign(n * n * n, Complex{0, 0});
    present_.assign(n * n * n, false);
}

RSymbolTable RSymbolTable::filled(const AnyonModel &model, Complex value) {
    RSymbolTable table(model);
    for (const auto &rule : model.rules()) {
        table.set(rule.a, rule.b, rule.c, value);
    }
    return table;
}

size_t RSymbolTable::flat(Label a, Label b, Label c) const {
    model_.check(a);
    model_.check(b);
    model_.check(c);
    size_t n = model_.size();
    return (static_cast<size_t>(a) * n + b) * n + c;
}

void RSymbolTable::set(Label a, Label b, Label c, Complex value) {
    if (!admissible(model_, a, b, c)) {
        Label idx[3] = {a, b, c};
        throw InputError("R" + describe(model_, idx) + " is not an allowed fusion");
    }
    size_t k = flat(a, b, c);
    values_[k] = value;
    present_[k] = true;
}

std::optional<Complex> RSymbolTable::get(Label a, Label b, Label c) const {
    size_t k = flat(a, b, c);
    if (!present_[k]) {
        return std::nullopt;
    }
    return values_[k];
}

void RSymbolTable::require_complete() const {
    for (const auto &rule : model_.rules()) {
        if (!present_[flat(rule.a, rule.b, rule.c)]) {
            Label idx[3] = {rule.a, rule.b, rule.c};
            throw CompletenessError("R table has no entry for allowed fusion R" + describe(model_, idx));
        }
    }
}

std::vector<std::pair<std::array<Label, 3>, Complex>> RSymbolTable::entries() const {
    std::vector<std::pair<std::array<Label, 3>, Complex>> out;
    for (const auto &rule : model_.rules()) {
        if (auto v = get(rule.a, rule.b, rule.c)) {
            out.push_back({{rule.a, rule.b, rule.c}, *v});
        }
    }
    return out;
}

FibonacciData fibonacci_data() {
    AnyonModel model = AnyonModel::fibonacci();
    // Every admissible entry with a vacuum leg is 1; only F(1111) is a genuine 2x2 block.
    FSymbolTable f = FSymbolTable::filled(model, 1.0);
    const double phi = std::numbers::phi;
    f.set({1, 1, 1, 1, 0, 0}, 1 / phi);
    f.set({1, 1, 1, 1, 0, 1}, 1 / std::sqrt(phi));
    f.set({1, 1, 1, 1, 1, 0}, 1 / std::sqrt(phi));
    f.set({1, 1, 1, 1, 1, 1}, -1 / phi);

    RSymbolTable r = RSymbolTable::filled(model, 1.0);
    r.set(1, 1, 0, std::polar(1.0, 4 * std::numbers::pi / 5));
    r.set(1, 1, 1, -std::polar(1.0, 2 * std::numbers::pi / 5));
    return {std::move(model), std::move(f), std::move(r)};
}

std::array<std::array<Complex, 2>, 2> fibonacci_f_matrix(const FSymbolTable &f) {
    return {{{f(1, 1, 1, 1, 0, 0), f(1, 1, 1, 1, 0, 1)}, {f(1, 1, 1, 1, 1, 0), f(1, 1, 1, 1, 1, 1)}}};
}

bool is_self_dual(const AnyonModel &model) {
    for (Label a = 0; a < static_cast<Label>(model.size()); a++) {
        if (model.dual(a) != a) {
            return false;
        }
    }
    return true;
}

namespace {

ConsistencyForm resolve(const AnyonModel &model, ConsistencyForm form) {
    bool self_dual = is_self_dual(model);
    if (form == ConsistencyForm::automatic) {
        return self_dual ? ConsistencyForm::unoriented : ConsistencyForm::oriented;
    }
    if (form == ConsistencyForm::unoriented && !self_dual) {
        throw InputError("the unoriented consistency equations need a self-dual model");
    }
    return form;
}

}  // namespace

double pentagon_residual(const FSymbolTable &F, ConsistencyForm form) {
    F.require_complete();
    form = resolve(F.model(), form);
    Label n = static_cast<Label>(F.model().size());
    double worst = 0;
    if (form == ConsistencyForm::unoriented) {
        for (Label m = 0; m < n; m++)
        for (Label l = 0; l < n; l++)
        for (Label k = 0; k < n; k++)
        for (Label p = 0; p < n; p++)
        for (Label j = 0; j < n; j++)
        for (Label i = 0; i < n; i++)
        for (Label q = 0; q < n; q++)
        for (Label r = 0; r < n; r++)
        for (Label s = 0; s < n; s++) {
            Complex lhs = 0;
            for (Label x = 0; x < n; x++) {
                lhs += F(m, l, k, p, q, x) * F(j, i, m, x, p, s) * F(j, s, l, k, x, r);
            }
            Complex rhs = F(j, i, q, k, p, r) * F(r, i, m, l, q, s);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    } else {
        // F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l]
        for (Label a = 0; a < n; a++)
        for (Label b = 0; b < n; b++)
        for (Label c = 0; c < n; c++)
        for (Label d = 0; d < n; d++)
        for (Label e = 0; e < n; e++)
        for (Label f = 0; f < n; f++)
        for (Label g = 0; g < n; g++)
        for (Label k = 0; k < n; k++)
        for (Label l = 0; l < n; l++) {
            Complex lhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, k);
            Complex rhs = 0;
            for (Label h = 0; h < n; h++) {
                rhs += F(a, b, c, g, f, h) * F(a, h, d, e, g, k) * F(b, c, d, k, h, l);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double hexagon_residual(const FSymbolTable &F, const RSymbolTable &R, ConsistencyForm form) {
    F.require_complete();
    R.require_complete();
    form = resolve(F.model(), form);
    Label n = static_cast<Label>(F.model().size());
    double worst = 0;
    if (form == ConsistencyForm::unoriented) {
        for (Label l = 0; l < n; l++)
        for (Label m = 0; m < n; m++)
        for (Label k = 0; k < n; k++)
        for (Label j = 0; j < n; j++)
        for (Label q = 0; q < n; q++)
        for (Label r = 0; r < n; r++) {
            Complex lhs = R(m, k, r) * F(l, m, k, j, q, r) * R(m, l, q);
            Complex rhs = 0;
            for (Label p = 0; p < n; p++) {
                rhs += F(l, k, m, j, p, r) * R(m, p, j) * F(m, l, k, j, q, p);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    } else {
        // R^{ca}_e F^{acb}_d[e,g] R^{cb}_g = sum_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g]
        for (Label a = 0; a < n; a++)
        for (Label b = 0; b < n; b++)
        for (Label c = 0; c < n; c++)
        for (Label d = 0; d < n; d++)
        for (Label e = 0; e < n; e++)
        for (Label g = 0; g < n; g++) {
            Complex lhs = R(c, a, e) * F(a, c, b, d, e, g) * R(c, b, g);
            Complex rhs = 0;
            for (Label f = 0; f < n; f++) {
                rhs += F(c, a, b, d, e, f) * R(c, f, d) * F(a, b, c, d, f, g);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double f_unitarity_residual(const FSymbolTable &F) {
    F.require_complete();
    const AnyonModel &model = F.model();
    Label n = static_cast<Label>(model.size());
    double worst = 0;
    for (Label a = 0; a < n; a++)
    for (Label b = 0; b < n; b++)
    for (Label c = 0; c < n; c++)
    for (Label d = 0; d < n; d++) {
        std::vector<Label> rows;
        for (Label i = 0; i < n; i++) {
            if (model.N(a, b, i) > 0 && model.N(i, c, d) > 0) {
                rows.push_back(i);
            }
        }
        for (Label i1 : rows) {
            for (Label i2 : rows) {
                Complex s = 0;
                for (Label j = 0; j < n; j++) {
                    s += F(a, b, c, d, i1, j) * std::conj(F(a, b, c, d, i2, j));
                }
                worst = std::max(worst, std::abs(s - (i1 == i2 ? 1.0 : 0.0)));
            }
        }
    }
    return worst;
}

FSymbolTable gauge_transform(const FSymbolTable &f, const std::function<Complex(Label, Label, Label)> &u) {
    FSymbolTable out(f.model());
    for (const auto &[idx, value] : f.entries()) {
        auto [a, b, c, d, i, j] = idx;
        out.set(idx, value * u(a, b, i) * u(i, c, d) / (u(b, c, j) * u(a, j, d)));
    }
    return out;
}

HalfInteger HalfInteger::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw InputError("bad half-integer '" + std::string(text) + "'");
        }
        return v;
    };
    int twice;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (parse_int(text.substr(slash + 1)) != 2) {
            throw InputError("half-integer '" + std::string(text) + "' must have denominator 2");
        }
        twice = parse_int(text.substr(0, slash));
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto frac = text.substr(dot + 1);
        if (frac != "5" && frac != "0") {
            throw InputError("bad half-integer '" + std::string(text) + "'");
        }
        twice = 2 * parse_int(text.substr(0, dot)) + (frac == "5" ? 1 : 0);
    } else {
        twice = 2 * parse_int(text);
    }
    if (twice < 0) {
        throw InputError("spin '" + std::string(text) + "' must be non-negative");
    }
    return {twice};
}

bool su2k_admissible(HalfInteger j1, HalfInteger j2, HalfInteger j, int k) {
    if (j1.twice < 0 || j2.twice < 0 || j.twice < 0) {
        throw InputError("spins must be non-negative");
    }
    if (k < 1) {
        throw InputError("level k must be positive");
    }
    int sum = j1.twice + j2.twice + j.twice;
    return std::abs(j1.twice - j2.twice) <= j.twice && j.twice <= j1.twice + j2.twice && sum % 2 == 0 &&
           j1.twice <= k && j2.twice <= k && j.twice <= k && sum <= 2 * k;
}

}  // namespace anyon
