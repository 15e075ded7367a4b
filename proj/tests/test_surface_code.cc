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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "anyon/errors.h"
#include "oracles.h"

using namespace anyon;

namespace {

PauliString single(size_t n, int d, size_t q, int x, int z) {
    PauliString p(n, d);
    p.set_x(q, x);
    p.set_z(q, z);
    return p;
}

PauliString random_pauli(std::mt19937 &rng, size_t n, int d) {
    PauliString p(n, d);
    for (size_t q = 0; q < n; q++) {
        p.set_x(q, static_cast<int>(rng() % d));
        p.set_z(q, static_cast<int>(rng() % d));
    }
    p.set_phase(static_cast<int>(rng() % (2 * d)));
    return p;
}

// A random error of at most `count` single-edge Paulis.
PauliString random_error(std::mt19937 &rng, const TorusLattice &lat, int d, int count) {
    PauliString e(lat.edge_count(), d);
    for (int k = 0; k < count; k++) {
        int edge = static_cast<int>(rng() % lat.edge_count());
        e.add_x(edge, static_cast<int>(rng() % d));
        e.add_z(edge, static_cast<int>(rng() % d));
    }
    return e;
}

int defects(const std::vector<int> &v) {
    int n = 0;
    for (int x : v) {
        n += x != 0;
    }
    return n;
}

LatticePath around_face(const TorusLattice &lat, int x, int y) {
    return {lat.vertex(x, y), {lat.h_edge(x, y), lat.v_edge(x + 1, y), lat.h_edge(x, y + 1), lat.v_edge(x, y)}};
}

LatticePath horizontal_loop(const TorusLattice &lat, int y) {
    LatticePath p{lat.vertex(0, y), {}};
    for (int x = 0; x < lat.lx(); x++) {
        p.edges.push_back(lat.h_edge(x, y));
    }
    return p;
}

}  // namespace

TEST(torus_lattice, incidence) {
    for (auto [lx, ly] : {std::pair{2, 2}, {3, 4}, {5, 5}, {6, 3}}) {
        TorusLattice lat(lx, ly);
        std::vector<int> star_sum(lat.edge_count(), 0), star_count(lat.edge_count(), 0);
        std::vector<int> face_sum(lat.edge_count(), 0), face_count(lat.edge_count(), 0);
        for (int v = 0; v < lat.vertex_count(); v++) {
            for (auto [e, s] : lat.star(v)) {
                star_sum[e] += s;
                star_count[e]++;
                auto [tail, head] = lat.edge_ends(e);
                EXPECT_EQ(v, s > 0 ? tail : head);
            }
            for (auto [e, s] : lat.boundary(v)) {
                face_sum[e] += s;
                face_count[e]++;
                auto [plus, minus] = lat.edge_faces(e);
                EXPECT_EQ(v, s > 0 ? plus : minus);
            }
        }
        for (int e = 0; e < lat.edge_count(); e++) {
            EXPECT_EQ(star_count[e], 2);
            EXPECT_EQ(face_count[e], 2);
            EXPECT_EQ(star_sum[e], 0);
            EXPECT_EQ(face_sum[e], 0);
        }
        for (int v = 0; v < lat.vertex_count(); v++) {
            std::set<int> s;
            for (auto t : lat.star(v)) {
                s.insert(t.edge);
            }
            for (int f = 0; f < lat.face_count(); f++) {
                int shared = 0;
                for (auto t : lat.boundary(f)) {
                    shared += s.count(t.edge);
                }
                EXPECT_TRUE(shared == 0 || shared == 2) << lx << "x" << ly;
            }
        }
    }
    EXPECT_THROW(TorusLattice(1, 3), InputError);
    EXPECT_THROW(TorusLattice(2, 2).check_edge(8), InputError);
}

TEST(pauli_string, algebra_matches_dense_matrices) {
    std::mt19937 rng(1);
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 30; trial++) {
            PauliString p = random_pauli(rng, 3, d), q = random_pauli(rng, 3, d);
            Eigen::MatrixXcd dp = oracle::dense_pauli(p), dq = oracle::dense_pauli(q);
            EXPECT_LT((oracle::dense_pauli(p * q) - dp * dq).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_LT((oracle::dense_pauli(p.adjoint()) - dp.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_LT((oracle::dense_pauli(p.pow(3)) - dp * dp * dp).cwiseAbs().maxCoeff(), 1e-12);
            int phi = commutation_phase(p, q);
            Complex w = std::polar(1.0, std::numbers::pi * phi / d);
            EXPECT_LT((dp * dq - w * dq * dp).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_EQ((phi + commutation_phase(q, p)) % (2 * d), 0);
        }
    }
}

TEST(pauli_string, commutation_examples) {
    EXPECT_EQ(commutation_phase(single(1, 2, 0, 0, 1), single(1, 2, 0, 1, 0)), 2);
    EXPECT_EQ(commutation_phase(single(2, 2, 0, 0, 1), single(2, 2, 1, 1, 0)), 0);
    EXPECT_EQ(commutation_phase(single(1, 3, 0, 0, 2), single(1, 3, 0, 1, 0)), 4);
    EXPECT_THROW(commutation_phase(PauliString(2, 2), PauliString(3, 2)), InputError);
    EXPECT_THROW(PauliString(2, 1), InputError);
}

TEST(pauli_string, bookkeeping) {
    PauliString p(4, 3);
    p.set_x(1, 5);
    p.set_z(2, -1);
    p.set_phase(-1);
    EXPECT_EQ(p.x(1), 2);
    EXPECT_EQ(p.z(2), 2);
    EXPECT_EQ(p.phase(), 5);
    EXPECT_EQ(p.weight(), 2u);
    EXPECT_FALSE(p.is_scalar());
    EXPECT_TRUE(p.pow(3).is_scalar());
    EXPECT_TRUE((p * p.adjoint()).is_identity());
    EXPECT_TRUE(p.pow(0).is_identity());
}

TEST(stabilizers, pairwise_commute_and_multiply_to_identity) {
    for (int d : {2, 3, 5}) {
        for (int lx = 2; lx <= 6; lx++) {
            for (int ly = 2; ly <= 6; ly += 2) {
                TorusLattice lat(lx, ly);
                Stabilizers stab = build_stabilizers(lat, d);
                ASSERT_EQ(static_cast<int>(stab.vertices.size()), lat.vertex_count());
                std::vector<PauliString> all = stab.vertices;
                all.insert(all.end(), stab.faces.begin(), stab.faces.end());
                for (size_t i = 0; i < all.size(); i++) {
                    for (size_t j = i + 1; j < all.size(); j++) {
                        ASSERT_EQ(commutation_phase(all[i], all[j]), 0) << d << " " << lx << "x" << ly;
                    }
                }
                PauliString pv(lat.edge_count(), d), pf(lat.edge_count(), d);
                for (const auto &s : stab.vertices) {
                    pv *= s;
                }
                for (const auto &s : stab.faces) {
                    pf *= s;
                }
                EXPECT_TRUE(pv.is_identity());
                EXPECT_TRUE(pf.is_identity());
            }
        }
    }
}

TEST(stabilizers, shape) {
    TorusLattice lat(2, 2);
    Stabilizers stab = build_stabilizers(lat, 2);
    EXPECT_EQ(stab.vertices.size(), 4u);
    EXPECT_EQ(stab.faces.size(), 4u);
    for (const auto &s : stab.vertices) {
        for (size_t q = 0; q < s.size(); q++) {
            EXPECT_EQ(s.x(q), 0);
        }
    }
    for (const auto &s : stab.faces) {
        for (size_t q = 0; q < s.size(); q++) {
            EXPECT_EQ(s.z(q), 0);
        }
    }
}

TEST(ground_space, degeneracy) {
    EXPECT_EQ(ground_space_dim(TorusLattice(2, 2), 2), 4u);
    EXPECT_EQ(ground_space_dim(TorusLattice(3, 3), 2), 4u);
    EXPECT_EQ(ground_space_dim(TorusLattice(2, 2), 3), 9u);
    for (int d : {2, 3, 5}) {
        for (int l = 2; l <= 6; l++) {
            EXPECT_EQ(ground_space_dim(TorusLattice(l, l), d), static_cast<uint64_t>(d * d));
            EXPECT_EQ(ground_space_dim(TorusLattice(l, l == 2 ? 3 : 2), d), static_cast<uint64_t>(d * d));
        }
    }
    EXPECT_THROW(ground_space_dim(TorusLattice(2, 2), 4), InputError);
    EXPECT_TRUE(is_prime(7));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(9));
}

TEST(symplectic_rank, simple_cases) {
    std::vector<PauliString> gens{single(2, 2, 0, 1, 0), single(2, 2, 0, 1, 0), single(2, 2, 1, 1, 1)};
    EXPECT_EQ(symplectic_rank(gens, 2), 2u);
    gens.push_back(gens[0] * gens[2]);
    EXPECT_EQ(symplectic_rank(gens, 2), 2u);
    EXPECT_EQ(symplectic_rank(std::vector<PauliString>{}, 3), 0u);
    EXPECT_THROW(symplectic_rank(gens, 6), InputError);
}

TEST(strings, single_edge_charge_and_flux) {
    TorusLattice lat(3, 3);
    int e = lat.h_edge(1, 1);
    PauliString charge = string_operator(lat, 2, {lat.vertex(1, 1), {e}}, StringKind::charge, 1);
    EXPECT_EQ(charge.x(e), 1);
    EXPECT_EQ(charge.weight(), 1u);
    Syndrome s = syndrome(lat, charge);
    EXPECT_EQ(defects(s.vertex), 2);
    EXPECT_EQ(defects(s.face), 0);
    EXPECT_NE(s.vertex[lat.vertex(1, 1)], 0);
    EXPECT_NE(s.vertex[lat.vertex(2, 1)], 0);

    auto [f1, f2] = lat.edge_faces(e);
    PauliString flux = string_operator(lat, 2, {f1, {e}}, StringKind::flux, 1);
    EXPECT_EQ(flux.z(e), 1);
    Syndrome t = syndrome(lat, flux);
    EXPECT_EQ(defects(t.vertex), 0);
    EXPECT_EQ(defects(t.face), 2);
    EXPECT_NE(t.face[f1], 0);
    EXPECT_NE(t.face[f2], 0);
}

TEST(strings, qutrit_endpoint_exponents) {
    TorusLattice lat(4, 4);
    LatticePath path{lat.vertex(0, 0), {lat.h_edge(0, 0), lat.v_edge(1, 0)}};
    PauliString s = string_operator(lat, 3, path, StringKind::charge, 2);
    Syndrome syn = syndrome(lat, s);
    EXPECT_EQ(syn.vertex[lat.vertex(0, 0)], 2);
    EXPECT_EQ(syn.vertex[lat.vertex(1, 1)], 1);
    EXPECT_EQ(defects(syn.vertex), 2);
    EXPECT_EQ(path_end(lat, path, StringKind::charge), lat.vertex(1, 1));
}

TEST(strings, contractible_loops_are_stabilizers) {
    for (int d : {2, 3, 5}) {
        TorusLattice lat(4, 3);
        Stabilizers stab = build_stabilizers(lat, d);
        for (int y = 0; y < lat.ly(); y++) {
            for (int x = 0; x < lat.lx(); x++) {
                PauliString loop = string_operator(lat, d, around_face(lat, x, y), StringKind::charge, 1);
                EXPECT_EQ(loop, stab.faces[lat.face(x, y)]);
                EXPECT_TRUE(syndrome(lat, loop).empty());
            }
        }
        // Flux loop around a vertex on the dual lattice: the four faces meeting at v.
        int v = lat.vertex(2, 1);
        auto star = lat.star(v);
        LatticePath dual{lat.face(2, 1), {star[0].edge, star[3].edge, star[2].edge, star[1].edge}};
        PauliString flux_loop = string_operator(lat, d, dual, StringKind::flux, 1);
        EXPECT_TRUE(syndrome(lat, flux_loop).empty());
        EXPECT_TRUE(flux_loop == stab.vertices[v] || flux_loop == stab.vertices[v].adjoint());
        // A bigger contractible loop is the product of the faces it encloses.
        LatticePath two{lat.vertex(0, 0),
                        {lat.h_edge(0, 0), lat.h_edge(1, 0), lat.v_edge(2, 0), lat.h_edge(1, 1), lat.h_edge(0, 1),
                         lat.v_edge(0, 0)}};
        PauliString big = string_operator(lat, d, two, StringKind::charge, 1);
        EXPECT_EQ(big, stab.faces[lat.face(0, 0)] * stab.faces[lat.face(1, 0)]);
        EXPECT_TRUE(homology_class(lat, big).trivial());
    }
}

TEST(strings, open_strings_make_two_defects) {
    std::mt19937 rng(6);
    for (int d : {2, 3, 5}) {
        TorusLattice lat(5, 4);
        for (int trial = 0; trial < 100; trial++) {
            StringKind kind = rng() % 2 ? StringKind::charge : StringKind::flux;
            LatticePath path{static_cast<int>(rng() % lat.vertex_count()), {}};
            int cur = path.start;
            int len = 1 + static_cast<int>(rng() % 6);
            for (int k = 0; k < len; k++) {
                auto terms = kind == StringKind::charge ? lat.star(cur) : lat.boundary(cur);
                path.edges.push_back(terms[rng() % 4].edge);
                cur = path_end(lat, path, kind);
            }
            int power = 1 + static_cast<int>(rng() % (d - 1));
            PauliString s = string_operator(lat, d, path, kind, power);
            Syndrome syn = syndrome(lat, s);
            EXPECT_TRUE(syn.sum_rule_holds());
            const auto &mine = kind == StringKind::charge ? syn.vertex : syn.face;
            const auto &other = kind == StringKind::charge ? syn.face : syn.vertex;
            EXPECT_EQ(defects(other), 0);
            if (cur == path.start) {
                EXPECT_EQ(defects(mine), 0);
                // Closed strings commute with every stabilizer.
                Stabilizers stab = build_stabilizers(lat, d);
                for (const auto &v : stab.vertices) {
                    EXPECT_EQ(commutation_phase(v, s), 0);
                }
            } else {
                EXPECT_EQ(defects(mine), 2);
                EXPECT_EQ(mine[path.start], power % d);
                EXPECT_EQ(mine[cur], (d - power % d) % d);
            }
        }
    }
}

TEST(strings, disconnected_path_is_rejected) {
    TorusLattice lat(3, 3);
    LatticePath bad{lat.vertex(0, 0), {lat.h_edge(0, 0), lat.h_edge(0, 2)}};
    EXPECT_THROW(string_operator(lat, 2, bad, StringKind::charge, 1), InputError);
    EXPECT_THROW(path_end(lat, {lat.vertex(0, 0), {lat.h_edge(2, 2)}}, StringKind::charge), InputError);
}

TEST(syndrome, identity_and_sum_rule) {
    TorusLattice lat(4, 4);
    EXPECT_TRUE(syndrome(lat, PauliString(lat.edge_count(), 3)).empty());
    std::mt19937 rng(10);
    for (int d : {2, 3, 5}) {
        for (int trial = 0; trial < 50; trial++) {
            Syndrome s = syndrome(lat, random_error(rng, lat, d, 1 + static_cast<int>(rng() % 6)));
            EXPECT_TRUE(s.sum_rule_holds());
        }
    }
    EXPECT_THROW(syndrome(lat, PauliString(3, 2)), InputError);
}

TEST(syndrome, matches_stabilizer_commutation) {
    std::mt19937 rng(14);
    TorusLattice lat(3, 4);
    for (int d : {2, 3, 5}) {
        Stabilizers stab = build_stabilizers(lat, d);
        for (int trial = 0; trial < 20; trial++) {
            PauliString err = random_error(rng, lat, d, 4);
            Syndrome s = syndrome(lat, err);
            for (int v = 0; v < lat.vertex_count(); v++) {
                EXPECT_EQ(2 * s.vertex[v], commutation_phase(stab.vertices[v], err));
            }
            for (int f = 0; f < lat.face_count(); f++) {
                EXPECT_EQ(2 * s.face[f], commutation_phase(stab.faces[f], err));
            }
        }
    }
}

TEST(decoder, adjacent_defects) {
    TorusLattice lat(5, 5);
    PauliString err(lat.edge_count(), 2);
    err.set_x(lat.v_edge(2, 2), 1);
    PauliString fix = correct(lat, syndrome(lat, err));
    EXPECT_EQ(fix.weight(), 1u);
    EXPECT_EQ(fix.x(lat.v_edge(2, 2)), 1);
    EXPECT_TRUE((err * fix).is_identity());
    EXPECT_TRUE(correct(lat, syndrome(lat, PauliString(lat.edge_count(), 2))).is_identity());
}

TEST(decoder, random_small_errors_are_cleared) {
    std::mt19937 rng(15);
    for (int d : {2, 3, 5}) {
        TorusLattice lat(5, 5);
        for (int trial = 0; trial < 300; trial++) {
            PauliString err = random_error(rng, lat, d, 1 + static_cast<int>(rng() % 3));
            PauliString fix = correct(lat, syndrome(lat, err));
            PauliString composite = err * fix;
            ASSERT_TRUE(syndrome(lat, composite).empty());
            EXPECT_NO_THROW(homology_class(lat, composite));
        }
    }
}

TEST(decoder, long_string_is_a_logical_error) {
    TorusLattice lat(5, 5);
    LatticePath path{lat.vertex(0, 0), {lat.h_edge(0, 0), lat.h_edge(1, 0), lat.h_edge(2, 0)}};
    PauliString err = string_operator(lat, 2, path, StringKind::charge, 1);
    PauliString fix = correct(lat, syndrome(lat, err));
    EXPECT_EQ(fix.weight(), 2u);
    HomologyClass h = homology_class(lat, err * fix);
    EXPECT_EQ(h.charge, (Winding{1, 0}));
    EXPECT_EQ(h.flux, (Winding{0, 0}));
    EXPECT_FALSE(h.trivial());
}

TEST(decoder, infeasible_syndrome) {
    TorusLattice lat(3, 3);
    Syndrome s{2, std::vector<int>(9, 0), std::vector<int>(9, 0)};
    s.vertex[4] = 1;
    EXPECT_THROW(correct(lat, s), InputError);
    Syndrome wrong{2, std::vector<int>(4, 0), std::vector<int>(9, 0)};
    EXPECT_THROW(correct(lat, wrong), InputError);
}

TEST(homology, loops) {
    for (int d : {2, 3}) {
        TorusLattice lat(4, 3);
        PauliString h = string_operator(lat, d, horizontal_loop(lat, 1), StringKind::charge, 1);
        EXPECT_TRUE(syndrome(lat, h).empty());
        EXPECT_EQ(homology_class(lat, h).charge, (Winding{1, 0}));
        EXPECT_TRUE(homology_class(lat, h.pow(d)).trivial());
        if (d == 3) {
            EXPECT_EQ(homology_class(lat, h.pow(2)).charge, (Winding{2, 0}));
        }
        LatticePath vertical{lat.vertex(2, 0), {}};
        for (int y = 0; y < lat.ly(); y++) {
            vertical.edges.push_back(lat.v_edge(2, y));
        }
        PauliString v = string_operator(lat, d, vertical, StringKind::charge, 1);
        EXPECT_EQ(homology_class(lat, v).charge, (Winding{0, 1}));

        // Flux loop crossing every vertical edge of column 1 runs along x on the dual lattice.
        LatticePath dual{lat.face(0, 1), {}};
        for (int x = 1; x <= lat.lx(); x++) {
            dual.edges.push_back(lat.v_edge(x % lat.lx(), 1));
        }
        PauliString f = string_operator(lat, d, dual, StringKind::flux, 1);
        EXPECT_TRUE(syndrome(lat, f).empty());
        EXPECT_EQ(homology_class(lat, f).flux, (Winding{1, 0}));
        EXPECT_EQ(homology_class(lat, f).charge, (Winding{0, 0}));
        LatticePath dual_y{lat.face(1, 0), {}};
        for (int y = 1; y <= lat.ly(); y++) {
            dual_y.edges.push_back(lat.h_edge(1, y % lat.ly()));
        }
        EXPECT_EQ(homology_class(lat, string_operator(lat, d, dual_y, StringKind::flux, 1)).flux, (Winding{0, 1}));
        // Stabilizers are homologically trivial.
        Stabilizers stab = build_stabilizers(lat, d);
        EXPECT_TRUE(homology_class(lat, stab.faces[3] * stab.vertices[5]).trivial());
        EXPECT_EQ(homology_class(lat, h * stab.faces[2]).charge, (Winding{1, 0}));
    }
    TorusLattice lat(3, 3);
    PauliString open(lat.edge_count(), 2);
    open.set_x(0, 1);
    EXPECT_THROW(homology_class(lat, open), InputError);
}

TEST(homology, logical_operators_anticommute) {
    TorusLattice lat(4, 4);
    PauliString charge = string_operator(lat, 2, horizontal_loop(lat, 0), StringKind::charge, 1);
    LatticePath dual{lat.face(0, 0), {}};
    for (int y = 1; y <= lat.ly(); y++) {
        dual.edges.push_back(lat.h_edge(0, y % lat.ly()));
    }
    PauliString flux = string_operator(lat, 2, dual, StringKind::flux, 1);
    EXPECT_EQ(commutation_phase(charge, flux), 2);
}

TEST(dyons, examples) {
    EXPECT_EQ(dyon_braiding_phase(2, {1, 0}, {0, 1}), 2);
    EXPECT_EQ(dyon_braiding_phase(3, {1, 2}, {2, 1}), 4);
    for (int d : {2, 3, 5}) {
        EXPECT_EQ(dyon_braiding_phase(d, {1, 1}, {0, 0}), 0);
    }
    EXPECT_THROW(dyon_braiding_phase(1, {0, 0}, {0, 0}), InputError);
}

TEST(dyons, composition_matches_closed_form_everywhere) {
    for (int d : {2, 3, 5}) {
        for (int r = 0; r < d; r++)
            for (int s = 0; s < d; s++)
                for (int r2 = 0; r2 < d; r2++)
                    for (int s2 = 0; s2 < d; s2++) {
                        int expected = (2 * (r * s2 + s * r2)) % (2 * d);
                        ASSERT_EQ(dyon_braiding_phase(d, {r, s}, {r2, s2}), expected);
                    }
    }
}

TEST(honeycomb, phase_diagram) {
    EXPECT_EQ(honeycomb_phase(1, 1, 1), HoneycombPhase::gapless);
    EXPECT_EQ(honeycomb_phase(1, 0, 0), HoneycombPhase::gapped);
    EXPECT_EQ(honeycomb_phase(0, 0, 0), HoneycombPhase::gapless);
    EXPECT_EQ(honeycomb_phase(1, 1, 2), HoneycombPhase::gapless);
    EXPECT_EQ(honeycomb_phase(1, 1, 2.001), HoneycombPhase::gapped);
    EXPECT_EQ(honeycomb_phase(-1, 1, 1), HoneycombPhase::gapless);
    EXPECT_EQ(honeycomb_phase(0.2, 0.3, 5), HoneycombPhase::gapped);
}

TEST(honeycomb, effective_coupling) {
    EXPECT_DOUBLE_EQ(honeycomb_effective_coupling(1, 1, 4), 1.0 / 1024);
    EXPECT_EQ(honeycomb_effective_coupling(0, 1, 1), 0.0);
    EXPECT_DOUBLE_EQ(honeycomb_effective_coupling(2, 2, 2), 1.0 / 8);
    EXPECT_DOUBLE_EQ(honeycomb_effective_coupling(1, 1, -4), 1.0 / 1024);
    EXPECT_THROW(honeycomb_effective_coupling(1, 1, 0), InputError);
}
