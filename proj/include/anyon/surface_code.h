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

#ifndef ANYON_SURFACE_CODE_H
#define ANYON_SURFACE_CODE_H

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace anyon {

struct EdgeTerm {
    int edge;
    /// +1 or -1.
    int sign;
    bool operator==(const EdgeTerm &) const = default;
};

/// An Lx by Ly square lattice on the torus.
///
/// Vertex (x, y) has index y*Lx + x and so does face (x, y), whose lower-left corner is
/// vertex (x, y). Edge 2v runs from vertex v to its +x neighbour, edge 2v+1 from v to its
/// +y neighbour. Coordinates wrap.
class TorusLattice {
   public:
    TorusLattice(int lx, int ly);

    int lx() const {
        return lx_;
    }
    int ly() const {
        return ly_;
    }
    int vertex_count() const {
        return lx_ * ly_;
    }
    int face_count() const {
        return lx_ * ly_;
    }
    int edge_count() const {
        return 2 * lx_ * ly_;
    }

    int vertex(int x, int y) const;
    int face(int x, int y) const {
        return vertex(x, y);
    }
    int h_edge(int x, int y) const {
        return 2 * vertex(x, y);
    }
    int v_edge(int x, int y) const {
        return 2 * vertex(x, y) + 1;
    }
    std::pair<int, int> coords(int vertex_or_face) const;
    bool is_horizontal(int edge) const {
        return edge % 2 == 0;
    }

    /// (tail, head) vertices.
    std::pair<int, int> edge_ends(int edge) const;
    /// The two faces bordering an edge: the one using it with sign +1, then the one with -1.
    std::pair<int, int> edge_faces(int edge) const;

    /// Edges at a vertex: sign +1 when the edge leaves it, -1 when it arrives.
    std::array<EdgeTerm, 4> star(int v) const;
    /// Counterclockwise boundary: bottom (+1), right (+1), top (-1), left (-1).
    std::array<EdgeTerm, 4> boundary(int f) const;

    void check_vertex(int v) const;
    void check_edge(int e) const;

   private:
    int lx_;
    int ly_;
};

/// e^{i pi phase / d} prod_e X_e^{x_e} Z_e^{z_e}, with the X factor to the left of the Z
/// factor on every edge. Exponents are kept mod d and the phase mod 2d.
class PauliString {
   public:
    PauliString(size_t qudits, int d);

    int d() const {
        return d_;
    }
    size_t size() const {
        return x_.size();
    }
    int x(size_t q) const {
        return x_[q];
    }
    int z(size_t q) const {
        return z_[q];
    }
    int phase() const {
        return phase_;
    }
    void set_x(size_t q, int power);
    void set_z(size_t q, int power);
    void add_x(size_t q, int power) {
        set_x(q, x_[q] + power);
    }
    void add_z(size_t q, int power) {
        set_z(q, z_[q] + power);
    }
    void set_phase(int phase);

    bool is_identity() const;
    /// True when every exponent vanishes, ignoring the phase.
    bool is_scalar() const;
    size_t weight() const;

    /// Operator product (*this) * other.
    PauliString operator*(const PauliString &other) const;
    PauliString &operator*=(const PauliString &other);
    PauliString pow(int k) const;
    PauliString adjoint() const;
    bool operator==(const PauliString &) const = default;

   private:
    int d_;
    int phase_ = 0;
    std::vector<int> x_;
    std::vector<int> z_;
};

/// phi with P Q = e^{i pi phi / d} Q P, as 2 sum_e (z^P_e x^Q_e - x^P_e z^Q_e) mod 2d.
int commutation_phase(const PauliString &p, const PauliString &q);

struct Stabilizers {
    /// A_v = prod over the star of Z^{sign}.
    std::vector<PauliString> vertices;
    /// B_f = prod over the boundary of X^{sign}.
    std::vector<PauliString> faces;
};

Stabilizers build_stabilizers(const TorusLattice &lat, int d);

bool is_prime(int d);

/// Rank over Z_p of the generators' (x | z) rows. p must be prime.
size_t symplectic_rank(std::span<const PauliString> generators, int p);

/// d^(n - rank) for prime d.
uint64_t ground_space_dim(const TorusLattice &lat, int d);

enum class StringKind {
    /// X-type string along lattice edges, making vertex defects.
    charge,
    /// Z-type string across edges on the dual lattice, making face defects.
    flux,
};

/// A walk starting at a vertex (charge) or face (flux). Each edge must touch the current
/// vertex or border the current face; the walk then moves to the far side.
struct LatticePath {
    int start = 0;
    std::vector<int> edges;
};

/// The string operator of power r along the path. Its syndrome is +r at the start and -r
/// at the end (nothing for a closed path).
PauliString string_operator(const TorusLattice &lat, int d, const LatticePath &path, StringKind kind, int power);

/// Endpoint of a path, validating it.
int path_end(const TorusLattice &lat, const LatticePath &path, StringKind kind);

struct Syndrome {
    int d = 2;
    /// Defect exponent per vertex (charges) and per face (fluxes), in [0, d).
    std::vector<int> vertex;
    std::vector<int> face;

    bool empty() const;
    /// Exponents of each kind sum to zero mod d.
    bool sum_rule_holds() const;
    bool operator==(const Syndrome &) const = default;
};

/// Exponent of stabilizer S is commutation_phase(S, error) / 2 mod d.
Syndrome syndrome(const TorusLattice &lat, const PauliString &error);

/// Greedy decoder: repeatedly moves the lowest-indexed defect onto its nearest partner
/// along a shortest path (x first, then y). Throws InputError if the sum rule fails.
PauliString correct(const TorusLattice &lat, const Syndrome &syn);

struct Winding {
    int x = 0;
    int y = 0;
    bool operator==(const Winding &) const = default;
};

struct HomologyClass {
    /// Windings of the X-type (charge) content.
    Winding charge;
    /// Windings of the Z-type (flux) content.
    Winding flux;
    bool trivial() const {
        return charge == Winding{} && flux == Winding{};
    }
    bool operator==(const HomologyClass &) const = default;
};

/// Signed crossings of the two fundamental cuts, mod d. Throws InputError if the operator
/// has a non-empty syndrome.
HomologyClass homology_class(const TorusLattice &lat, const PauliString &loop);

/// A charge loop of power r around a vertex with a flux loop of power s winds a dyon (r, s)
/// around one created there with (r', s'). Returns the phase exponent in units of pi/d,
/// computed from the operators and checked against 2(r s' + s r') mod 2d.
int dyon_braiding_phase(int d, std::pair<int, int> dyon1, std::pair<int, int> dyon2);

enum class HoneycombPhase { gapless, gapped };

/// Gapless iff |Jx| <= |Jy| + |Jz| and cyclic permutations; equality counts as gapless.
HoneycombPhase honeycomb_phase(double jx, double jy, double jz);

/// Jx^2 Jy^2 / (16 |Jz|^3).
double honeycomb_effective_coupling(double jx, double jy, double jz);

}  // namespace anyon

#endif
