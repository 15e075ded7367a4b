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

#ifndef ANYON_STRING_NET_H
#define ANYON_STRING_NET_H

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "anyon/fr_symbols.h"

namespace anyon {

/// Fibonacci string-net on one hexagonal face. Twelve edges each carry label 0 or 1:
/// boundary edges g, h, i, j, k, l (bits 0..5 of the boundary index) and the external legs
/// a, b, c, d, e, f (bits 0..5 of the external index). The full basis index is
/// external * 64 + boundary. The six vertices meet edges (a; l, g), (b; g, h), (c; h, i),
/// (d; i, j), (e; j, k), (f; k, l).
inline constexpr int kFaceEdges = 6;
inline constexpr int kFaceSectors = 64;

/// Vertex term on three legs; diagonal, basis index bit k = label of leg k.
struct VertexProjector {
    Eigen::Matrix<double, 8, 8> matrix;
    /// pauli[mask] is the coefficient of prod_{k in mask} Z_k in H_v (Z|1> = -|1>).
    std::array<double, 8> pauli;
};

VertexProjector vertex_projector();

/// True unless exactly one leg carries label 1.
bool vertex_allowed(int a, int b, int c);

/// Labels (external, boundary-left, boundary-right) of face vertex k in 0..5.
std::array<int, 3> face_vertex_legs(int k, uint32_t external, uint32_t boundary);

/// All six face vertices allowed.
bool face_config_allowed(uint32_t external, uint32_t boundary);

/// A face operator, block diagonal in the external labels.
class FaceOperator {
   public:
    explicit FaceOperator(std::array<Eigen::MatrixXcd, kFaceSectors> blocks) : blocks_(std::move(blocks)) {
    }
    /// 64x64 action on boundary labels for fixed external labels.
    const Eigen::MatrixXcd &block(uint32_t external) const {
        return blocks_.at(external);
    }
    /// Entry of the full 4096x4096 matrix.
    std::complex<double> operator()(uint32_t row, uint32_t col) const;
    FaceOperator operator+(const FaceOperator &other) const;
    FaceOperator operator*(const FaceOperator &other) const;
    FaceOperator scaled(std::complex<double> c) const;

   private:
    std::array<Eigen::MatrixXcd, kFaceSectors> blocks_;
};

/// <g'...l'| B^s |g...l> = F(a l s g')^g_{l'} F(b g s h')^h_{g'} F(c h s i')^i_{h'}
///                       * F(d i s j')^j_{i'} F(e j s k')^k_{j'} F(f k s l')^l_{k'}
/// with the external labels untouched.
FaceOperator face_operator(const FSymbolTable &f, int s);
FaceOperator face_operator(int s);

/// Diagonal projector onto configurations with all six vertices allowed.
FaceOperator constrained_projector();

/// H_f = sum_s d_s B^s / sum_s d_s^2 for the Fibonacci data.
FaceOperator face_term();

struct FaceTermReport {
    /// max |H - H^dag| on the constrained subspace.
    double hermiticity;
    /// max |H^2 - H| on the constrained subspace.
    double projector;
    /// max over the six vertex terms of max |[H_f, V_k]| on the full space.
    double vertex_commutation;
    /// max distance of an eigenvalue (constrained subspace) from {0, 1}.
    double eigenvalue;
    /// Number of constrained configurations and the trace of H_f there.
    int constrained_dim;
    double rank;
};

FaceTermReport face_term_checks();

}  // namespace anyon

#endif
