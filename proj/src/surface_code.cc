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

#include "anyon/surface_code.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "anyon/errors.h"

namespace anyon {

namespace {

int mod(int64_t a, int m) {
    int64_t r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

TorusLattice::TorusLattice(int lx, int ly) : lx_(lx), ly_(ly) {
    if (lx < 2 || ly < 2) {
        throw InputError("torus dimensions must be at least 2x2, got " + std::to_string(lx) + "x" + std::to_string(ly));
    }
    if (static_cast<int64_t>(lx) * ly > (1 << 24)) {
        throw ResourceError("torus of " + std::to_string(lx) + "x" + std::to_string(ly) + " is too large");
    }
}

int TorusLattice::vertex(int x, int y) const {
    return mod(y, ly_) * lx_ + mod(x, lx_);
}

std::pair<int, int> TorusLattice::coords(int v) const {
    check_vertex(v);
    return {v % lx_, v / lx_};
}

void TorusLattice::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw InputError("vertex/face index " + std::to_string(v) + " out of range");
    }
}

void TorusLattice::check_edge(int e) const {
    if (e < 0 || e >= edge_count()) {
        throw InputError("edge index " + std::to_string(e) + " out of range");
    }
}

std::pair<int, int> TorusLattice::edge_ends(int e) const {
    check_edge(e);
    auto [x, y] = coords(e / 2);
    int head = is_horizontal(e) ? vertex(x + 1, y) : vertex(x, y + 1);
    return {e / 2, head};
}

std::pair<int, int> TorusLattice::edge_faces(int e) const {
    check_edge(e);
    auto [x, y] = coords(e / 2);
    if (is_horizontal(e)) {
        return {face(x, y), face(x, y - 1)};
    }
    return {face(x - 1, y), face(x, y)};
}

std::array<EdgeTerm, 4> TorusLattice::star(int v) const {
    auto [x, y] = coords(v);
    return {{{h_edge(x, y), +1}, {v_edge(x, y), +1}, {h_edge(x - 1, y), -1}, {v_edge(x, y - 1), -1}}};
}

std::array<EdgeTerm, 4> TorusLattice::boundary(int f) const {
    auto [x, y] = coords(f);
    return {{{h_edge(x, y), +1}, {v_edge(x + 1, y), +1}, {h_edge(x, y + 1), -1}, {v_edge(x, y), -1}}};
}

PauliString::PauliString(size_t qudits, int d) : d_(d), x_(qudits, 0), z_(qudits, 0) {
    if (d < 2) {
        throw InputError("qudit dimension must be at least 2, got " + std::to_string(d));
    }
}

void PauliString::set_x(size_t q, int power) {
    x_.at(q) = mod(power, d_);
}

void PauliString::set_z(size_t q, int power) {
    z_.at(q) = mod(power, d_);
}

void PauliString::set_phase(int phase) {
    phase_ = mod(phase, 2 * d_);
}

bool PauliString::is_scalar() const {
    return std::all_of(x_.begin(), x_.end(), [](int v) { return v == 0; }) &&
           std::all_of(z_.begin(), z_.end(), [](int v) { return v == 0; });
}

bool PauliString::is_identity() const {
    return phase_ == 0 && is_scalar();
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t q = 0; q < x_.size(); q++) {
        w += x_[q] != 0 || z_[q] != 0;
    }
    return w;
}

PauliString PauliString::operator*(const PauliString &other) const {
    PauliString out = *this;
    out *= other;
    return out;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.d_ != d_ || other.size() != size()) {
        throw InputError("Pauli strings act on different systems");
    }
    // X^a Z^b X^c Z^e = e^{2 pi i b c / d} X^{a+c} Z^{b+e}
    int64_t phase = phase_ + other.phase_;
    for (size_t q = 0; q < x_.size(); q++) {
        phase += 2 * z_[q] * other.x_[q];
        x_[q] = (x_[q] + other.x_[q]) % d_;
        z_[q] = (z_[q] + other.z_[q]) % d_;
    }
    phase_ = mod(phase, 2 * d_);
    return *this;
}

PauliString PauliString::pow(int k) const {
    if (k < 0) {
        return adjoint().pow(-k);
    }
    PauliString out(size(), d_);
    for (int i = 0; i < k; i++) {
        out *= *this;
    }
    return out;
}

PauliString PauliString::adjoint() const {
    // (X^a Z^b)^dag = Z^-b X^-a = e^{2 pi i a b / d} X^-a Z^-b
    PauliString out(size(), d_);
    int64_t phase = -phase_;
    for (size_t q = 0; q < x_.size(); q++) {
        out.set_x(q, -x_[q]);
        out.set_z(q, -z_[q]);
        phase += 2 * x_[q] * z_[q];
    }
    out.phase_ = mod(phase, 2 * d_);
    return out;
}

int commutation_phase(const PauliString &p, const PauliString &q) {
    if (p.d() != q.d() || p.size() != q.size()) {
        throw InputError("Pauli strings act on different systems");
    }
    int64_t sum = 0;
    for (size_t e = 0; e < p.size(); e++) {
        sum += p.z(e) * q.x(e) - p.x(e) * q.z(e);
    }
    return mod(2 * sum, 2 * p.d());
}

Stabilizers build_stabilizers(const TorusLattice &lat, int d) {
    Stabilizers out;
    size_t n = lat.edge_count();
    for (int v = 0; v < lat.vertex_count(); v++) {
        PauliString a(n, d);
        for (auto [e, sign] : lat.star(v)) {
            a.add_z(e, sign);
        }
        out.vertices.push_back(std::move(a));
    }
    for (int f = 0; f < lat.face_count(); f++) {
        PauliString b(n, d);
        for (auto [e, sign] : lat.boundary(f)) {
            b.add_x(e, sign);
        }
        out.faces.push_back(std::move(b));
    }
    return out;
}

bool is_prime(int d) {
    if (d < 2) {
        return false;
    }
    for (int k = 2; k * k <= d; k++) {
        if (d % k == 0) {
            return false;
        }
    }
    return true;
}

size_t symplectic_rank(std::span<const PauliString> generators, int p) {
    if (!is_prime(p)) {
        throw InputError("rank over Z_" + std::to_string(p) + " needs a prime modulus");
    }
    if (generators.empty()) {
        return 0;
    }
    size_t n = generators[0].size();
    std::vector<std::vector<int>> rows;
    for (const auto &g : generators) {
        if (g.size() != n) {
            throw InputError("generators act on different systems");
        }
        std::vector<int> row(2 * n);
        for (size_t q = 0; q < n; q++) {
            row[q] = mod(g.x(q), p);
            row[n + q] = mod(g.z(q), p);
        }
        rows.push_back(std::move(row));
    }
    auto inverse = [p](int a) {
        int result = 1;
        for (int e = p - 2, base = a; e > 0; e >>= 1, base = base * base % p) {
            if (e & 1) {
                result = result * base % p;
            }
        }
        return result;
    };
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        int inv = inverse(rows[rank][col]);
        for (int &v : rows[rank]) {
            v = v * inv % p;
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == rank || rows[r][col] == 0) {
                continue;
            }
            int factor = rows[r][col];
            for (size_t c = col; c < 2 * n; c++) {
                rows[r][c] = mod(rows[r][c] - factor * rows[rank][c], p);
            }
        }
        rank++;
    }
    return rank;
}

uint64_t ground_space_dim(const TorusLattice &lat, int d) {
    if (!is_prime(d)) {
        throw InputError("ground_space_dim needs a prime qudit dimension, got " + std::to_string(d));
    }
    Stabilizers stab = build_stabilizers(lat, d);
    std::vector<PauliString> all = stab.vertices;
    all.insert(all.end(), stab.faces.begin(), stab.faces.end());
    size_t free = lat.edge_count() - symplectic_rank(all, d);
    uint64_t dim = 1;
    for (size_t i = 0; i < free; i++) {
        if (dim > std::numeric_limits<uint64_t>::max() / static_cast<uint64_t>(d)) {
            throw ResourceError("ground space dimension overflows 64 bits");
        }
        dim *= d;
    }
    return dim;
}

namespace {

// Walks the path, calling step(edge, forward_sign) per edge, and returns the endpoint.
template <typename Step>
int walk(const TorusLattice &lat, const LatticePath &path, StringKind kind, Step step) {
    lat.check_vertex(path.start);
    int cur = path.start;
    for (size_t i = 0; i < path.edges.size(); i++) {
        int e = path.edges[i];
        lat.check_edge(e);
        auto [a, b] = kind == StringKind::charge ? lat.edge_ends(e) : lat.edge_faces(e);
        if (cur == a) {
            step(e, +1);
            cur = b;
        } else if (cur == b) {
            step(e, -1);
            cur = a;
        } else {
            throw InputError("disconnected path: edge " + std::to_string(e) + " at position " + std::to_string(i) +
                             " does not touch " + (kind == StringKind::charge ? "vertex " : "face ") +
                             std::to_string(cur));
        }
    }
    return cur;
}

}  // namespace

int path_end(const TorusLattice &lat, const LatticePath &path, StringKind kind) {
    return walk(lat, path, kind, [](int, int) {});
}

PauliString string_operator(const TorusLattice &lat, int d, const LatticePath &path, StringKind kind, int power) {
    PauliString out(lat.edge_count(), d);
    walk(lat, path, kind, [&](int e, int dir) {
        if (kind == StringKind::charge) {
            out.add_x(e, dir * power);
        } else {
            // Crossing from the face using e with sign +1 (dir = +1) or -1 (dir = -1).
            out.add_z(e, -dir * power);
        }
    });
    return out;
}

bool Syndrome::empty() const {
    return std::all_of(vertex.begin(), vertex.end(), [](int v) { return v == 0; }) &&
           std::all_of(face.begin(), face.end(), [](int v) { return v == 0; });
}

bool Syndrome::sum_rule_holds() const {
    int64_t sv = 0;
    int64_t sf = 0;
    for (int v : vertex) {
        sv += v;
    }
    for (int f : face) {
        sf += f;
    }
    return sv % d == 0 && sf % d == 0;
}

Syndrome syndrome(const TorusLattice &lat, const PauliString &error) {
    if (static_cast<int>(error.size()) != lat.edge_count()) {
        throw InputError("operator does not act on this lattice");
    }
    int d = error.d();
    Syndrome out{d, std::vector<int>(lat.vertex_count()), std::vector<int>(lat.face_count())};
    // commutation_phase(S, E) / 2 without building S.
    for (int v = 0; v < lat.vertex_count(); v++) {
        int64_t s = 0;
        for (auto [e, sign] : lat.star(v)) {
            s += sign * error.x(e);
        }
        out.vertex[v] = mod(s, d);
    }
    for (int f = 0; f < lat.face_count(); f++) {
        int64_t s = 0;
        for (auto [e, sign] : lat.boundary(f)) {
            s -= sign * error.z(e);
        }
        out.face[f] = mod(s, d);
    }
    return out;
}

namespace {

int torus_delta(int from, int to, int period) {
    int delta = mod(to - from, period);
    return delta > period / 2 ? delta - period : delta;
}

LatticePath shortest_path(const TorusLattice &lat, int from, int to, StringKind kind) {
    auto [x, y] = lat.coords(from);
    auto [tx, ty] = lat.coords(to);
    int dx = torus_delta(x, tx, lat.lx());
    int dy = torus_delta(y, ty, lat.ly());
    LatticePath path{from, {}};
    bool charge = kind == StringKind::charge;
    for (; dx > 0; dx--, x++) {
        path.edges.push_back(charge ? lat.h_edge(x, y) : lat.v_edge(x + 1, y));
    }
    for (; dx < 0; dx++, x--) {
        path.edges.push_back(charge ? lat.h_edge(x - 1, y) : lat.v_edge(x, y));
    }
    for (; dy > 0; dy--, y++) {
        path.edges.push_back(charge ? lat.v_edge(x, y) : lat.h_edge(x, y + 1));
    }
    for (; dy < 0; dy++, y--) {
        path.edges.push_back(charge ? lat.v_edge(x, y - 1) : lat.h_edge(x, y));
    }
    return path;
}

void pair_defects(const TorusLattice &lat, std::vector<int> exps, StringKind kind, PauliString &out) {
    int d = out.d();
    while (true) {
        auto first = std::find_if(exps.begin(), exps.end(), [](int e) { return e != 0; });
        if (first == exps.end()) {
            return;
        }
        int a = static_cast<int>(first - exps.begin());
        auto [ax, ay] = lat.coords(a);
        int best = -1;
        int best_dist = std::numeric_limits<int>::max();
        for (int b = 0; b < static_cast<int>(exps.size()); b++) {
            if (b == a || exps[b] == 0) {
                continue;
            }
            auto [bx, by] = lat.coords(b);
            int dist = std::abs(torus_delta(ax, bx, lat.lx())) + std::abs(torus_delta(ay, by, lat.ly()));
            if (dist < best_dist) {
                best_dist = dist;
                best = b;
            }
        }
        if (best < 0) {
            throw InvariantError("lone defect left while pairing");
        }
        int e = exps[a];
        out *= string_operator(lat, d, shortest_path(lat, a, best, kind), kind, -e);
        exps[a] = 0;
        exps[best] = mod(exps[best] + e, d);
    }
}

}  // namespace

PauliString correct(const TorusLattice &lat, const Syndrome &syn) {
    if (static_cast<int>(syn.vertex.size()) != lat.vertex_count() ||
        static_cast<int>(syn.face.size()) != lat.face_count()) {
        throw InputError("syndrome does not match the lattice");
    }
    if (!syn.sum_rule_holds()) {
        throw InputError("infeasible syndrome: defect exponents do not sum to zero mod d");
    }
    PauliString out(lat.edge_count(), syn.d);
    pair_defects(lat, syn.vertex, StringKind::charge, out);
    pair_defects(lat, syn.face, StringKind::flux, out);
    return out;
}

HomologyClass homology_class(const TorusLattice &lat, const PauliString &loop) {
    if (!syndrome(lat, loop).empty()) {
        throw InputError("homology class needs an operator with empty syndrome");
    }
    int d = loop.d();
    HomologyClass out;
    int64_t cx = 0;
    int64_t cy = 0;
    int64_t fx = 0;
    int64_t fy = 0;
    for (int y = 0; y < lat.ly(); y++) {
        cx += loop.x(lat.h_edge(0, y));
        fx -= loop.z(lat.v_edge(0, y));
    }
    for (int x = 0; x < lat.lx(); x++) {
        cy += loop.x(lat.v_edge(x, 0));
        fy += loop.z(lat.h_edge(x, 0));
    }
    out.charge = {mod(cx, d), mod(cy, d)};
    out.flux = {mod(fx, d), mod(fy, d)};
    return out;
}

int dyon_braiding_phase(int d, std::pair<int, int> dyon1, std::pair<int, int> dyon2) {
    if (d < 2) {
        throw InputError("qudit dimension must be at least 2");
    }
    auto [r, s] = dyon1;
    auto [r2, s2] = dyon2;
    TorusLattice lat(4, 4);
    Stabilizers stab = build_stabilizers(lat, d);

    // The second dyon sits on vertex (1,1) and face (1,1), created by strings running in
    // from the far side of the lattice.
    int v0 = lat.vertex(1, 1);
    int f0 = lat.face(1, 1);
    PauliString creation = string_operator(lat, d, shortest_path(lat, v0, lat.vertex(3, 3), StringKind::charge),
                                           StringKind::charge, r2);
    creation *= string_operator(lat, d, shortest_path(lat, f0, lat.face(3, 3), StringKind::flux), StringKind::flux, s2);
    Syndrome created = syndrome(lat, creation);
    if (created.vertex[v0] != mod(r2, d) || created.face[f0] != mod(s2, d)) {
        throw InvariantError("creation string does not place the dyon");
    }

    // Counterclockwise charge loop around the face and flux loop around the vertex.
    PauliString wind = stab.faces[f0].pow(mod(r, d)) * stab.vertices[v0].pow(mod(s, d));
    int composed = commutation_phase(wind, creation);
    int formula = mod(2 * (static_cast<int64_t>(r) * s2 + static_cast<int64_t>(s) * r2), 2 * d);
    if (composed != formula) {
        throw InvariantError(
            "dyon braiding: operator composition gives " + std::to_string(composed) + " but the closed form gives " +
            std::to_string(formula));
    }
    return composed;
}

HoneycombPhase honeycomb_phase(double jx, double jy, double jz) {
    double ax = std::abs(jx);
    double ay = std::abs(jy);
    double az = std::abs(jz);
    bool gapless = ax <= ay + az && ay <= ax + az && az <= ax + ay;
    return gapless ? HoneycombPhase::gapless : HoneycombPhase::gapped;
}

double honeycomb_effective_coupling(double jx, double jy, double jz) {
    if (jz == 0) {
        throw InputError("effective coupling needs Jz != 0");
    }
    return jx * jx * jy * jy / (16 * std::pow(std::abs(jz), 3));
}

}  // namespace anyon
