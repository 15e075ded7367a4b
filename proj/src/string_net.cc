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

#include "anyon/string_net.h"

#include <bit>
#include <cmath>

#include "anyon/anyon_model.h"
#include "anyon/errors.h"

namespace anyon {

namespace {

int bit(uint32_t word, int k) {
    return static_cast<int>((word >> k) & 1);
}

double max_abs(const Eigen::MatrixXcd &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

bool vertex_allowed(int a, int b, int c) {
    return a + b + c != 1;
}

VertexProjector vertex_projector() {
    VertexProjector out;
    out.matrix.setZero();
    for (int c = 0; c < 8; c++) {
        out.matrix(c, c) = vertex_allowed(bit(c, 0), bit(c, 1), bit(c, 2)) ? 1 : 0;
    }
    // Tr(H_v Z_S) / 8
    for (int mask = 0; mask < 8; mask++) {
        double sum = 0;
        for (int c = 0; c < 8; c++) {
            sum += out.matrix(c, c) * ((std::popcount(static_cast<unsigned>(c & mask)) & 1) ? -1 : 1);
        }
        out.pauli[mask] = sum / 8;
    }
    return out;
}

std::array<int, 3> face_vertex_legs(int k, uint32_t external, uint32_t boundary) {
    if (k < 0 || k >= kFaceEdges) {
        throw InputError("face vertex index out of range");
    }
    // Vertex k joins external leg k with boundary edges k-1 and k (cyclically).
    return {bit(external, k), bit(boundary, (k + kFaceEdges - 1) % kFaceEdges), bit(boundary, k)};
}

bool face_config_allowed(uint32_t external, uint32_t boundary) {
    for (int k = 0; k < kFaceEdges; k++) {
        auto [x, l, r] = face_vertex_legs(k, external, boundary);
        if (!vertex_allowed(x, l, r)) {
            return false;
        }
    }
    return true;
}

std::complex<double> FaceOperator::operator()(uint32_t row, uint32_t col) const {
    if (row >= kFaceSectors * kFaceSectors || col >= kFaceSectors * kFaceSectors) {
        throw InputError("face operator index out of range");
    }
    if (row / kFaceSectors != col / kFaceSectors) {
        return 0;
    }
    return blocks_[row / kFaceSectors](row % kFaceSectors, col % kFaceSectors);
}

FaceOperator FaceOperator::operator+(const FaceOperator &other) const {
    std::array<Eigen::MatrixXcd, kFaceSectors> out;
    for (int e = 0; e < kFaceSectors; e++) {
        out[e] = blocks_[e] + other.blocks_[e];
    }
    return FaceOperator(std::move(out));
}

FaceOperator FaceOperator::operator*(const FaceOperator &other) const {
    std::array<Eigen::MatrixXcd, kFaceSectors> out;
    for (int e = 0; e < kFaceSectors; e++) {
        out[e] = blocks_[e] * other.blocks_[e];
    }
    return FaceOperator(std::move(out));
}

FaceOperator FaceOperator::scaled(std::complex<double> c) const {
    std::array<Eigen::MatrixXcd, kFaceSectors> out;
    for (int e = 0; e < kFaceSectors; e++) {
        out[e] = blocks_[e] * c;
    }
    return FaceOperator(std::move(out));
}

FaceOperator face_operator(const FSymbolTable &f, int s) {
    if (f.model().size() != 2) {
        throw InputError("the face operator needs a two-label (Fibonacci) F table");
    }
    if (s != 0 && s != 1) {
        throw InputError("string type must be 0 or 1");
    }
    std::array<Eigen::MatrixXcd, kFaceSectors> blocks;
    for (uint32_t ext = 0; ext < kFaceSectors; ext++) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(kFaceSectors, kFaceSectors);
        for (uint32_t in = 0; in < kFaceSectors; in++) {
            for (uint32_t out = 0; out < kFaceSectors; out++) {
                std::complex<double> amp = 1;
                // Factor k: F(x_k, b_{k-1}, s, b'_k)^{b_k}_{b'_{k-1}}
                for (int k = 0; k < kFaceEdges && amp != 0.0; k++) {
                    int prev = (k + kFaceEdges - 1) % kFaceEdges;
                    amp *= f(bit(ext, k), bit(in, prev), s, bit(out, k), bit(in, k), bit(out, prev));
                }
                m(out, in) = amp;
            }
        }
        blocks[ext] = std::move(m);
    }
    return FaceOperator(std::move(blocks));
}

FaceOperator face_operator(int s) {
    return face_operator(fibonacci_data().f, s);
}

FaceOperator constrained_projector() {
    std::array<Eigen::MatrixXcd, kFaceSectors> blocks;
    for (uint32_t ext = 0; ext < kFaceSectors; ext++) {
        blocks[ext] = Eigen::MatrixXcd::Zero(kFaceSectors, kFaceSectors);
        for (uint32_t b = 0; b < kFaceSectors; b++) {
            blocks[ext](b, b) = face_config_allowed(ext, b) ? 1 : 0;
        }
    }
    return FaceOperator(std::move(blocks));
}

FaceOperator face_term() {
    FibonacciData fib = fibonacci_data();
    std::vector<double> dims = quantum_dimensions(fib.model);
    double norm = 0;
    for (double d : dims) {
        norm += d * d;
    }
    FaceOperator h = face_operator(fib.f, 0).scaled(dims[0] / norm);
    return h + face_operator(fib.f, 1).scaled(dims[1] / norm);
}

FaceTermReport face_term_checks() {
    FaceOperator h = face_term();
    FaceTermReport report{};
    for (uint32_t ext = 0; ext < kFaceSectors; ext++) {
        std::vector<int> allowed;
        for (uint32_t b = 0; b < kFaceSectors; b++) {
            if (face_config_allowed(ext, b)) {
                allowed.push_back(static_cast<int>(b));
            }
        }
        const Eigen::MatrixXcd &full = h.block(ext);
        Eigen::Index n = static_cast<Eigen::Index>(allowed.size());
        Eigen::MatrixXcd sub(n, n);
        for (Eigen::Index r = 0; r < n; r++) {
            for (Eigen::Index c = 0; c < n; c++) {
                sub(r, c) = full(allowed[r], allowed[c]);
            }
        }
        report.constrained_dim += static_cast<int>(n);
        report.hermiticity = std::max(report.hermiticity, max_abs(sub - sub.adjoint()));
        report.projector = std::max(report.projector, max_abs(sub * sub - sub));
        if (n > 0) {
            Eigen::MatrixXcd herm = (sub + sub.adjoint()) / 2.0;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
            for (double ev : solver.eigenvalues()) {
                report.eigenvalue = std::max(report.eigenvalue, std::min(std::abs(ev), std::abs(ev - 1)));
            }
            report.rank += sub.trace().real();
        }

        // Vertex terms are diagonal: [H, V]_{rc} = H_{rc} (V_c - V_r).
        for (int k = 0; k < kFaceEdges; k++) {
            for (uint32_t r = 0; r < kFaceSectors; r++) {
                auto [xr, lr, rr] = face_vertex_legs(k, ext, r);
                double vr = vertex_allowed(xr, lr, rr);
                for (uint32_t c = 0; c < kFaceSectors; c++) {
                    auto [xc, lc, rc] = face_vertex_legs(k, ext, c);
                    double vc = vertex_allowed(xc, lc, rc);
                    report.vertex_commutation =
                        std::max(report.vertex_commutation, std::abs(full(r, c) * (vc - vr)));
                }
            }
        }
    }
    return report;
}

}  // namespace anyon
