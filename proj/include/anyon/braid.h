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

#ifndef ANYON_BRAID_H
#define ANYON_BRAID_H

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace anyon {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// A word in the braid group B_n. Letter +i is the counterclockwise exchange of strands
/// i and i+1 (generator b_i); -i is its inverse.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord &) const = default;
    size_t size() const {
        return letters.size();
    }
};

/// Parses `Bn: s1 s2^-1 ...`. Throws ParseError (with byte offset) on malformed text and
/// InputError when a generator index is not below the strand count.
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord &word);

/// The inverse braid: letters reversed and negated.
BraidWord inverse(const BraidWord &word);
/// Sum of letter signs.
int letter_sign_sum(const BraidWord &word);

/// A matrix representation of the braid group.
struct BraidRep {
    std::string name;
    int dimension = 1;
    /// Strand count the representation is defined for; 0 means every B_n (one matrix
    /// shared by all generators).
    int strands = 0;
    /// generators[i-1] represents b_i; inverses[i-1] represents b_i^-1.
    std::vector<Matrix> generators;
    std::vector<Matrix> inverses;
    /// All generator matrices unitary within 1e-10.
    bool unitary = false;

    /// Matrix of a signed letter.
    const Matrix &letter(int g) const;
};

/// b_j -> e^{i phi} for every j.
BraidRep abelian_rep(double phi);

/// Principal-branch quantities of the Temperley-Lieb parameterisation at t.
struct TLParameters {
    Complex t;
    Complex quarter_root;  // t^{1/4}
    Complex d;             // -t^{-1/2} - t^{1/2}
};
TLParameters tl_parameters(Complex t);

/// The two-dimensional B_3 representation Gamma(b_j) = t^{-1/4} 1 + t^{1/4} V_j with
///
///     V_1 = [[d, 0], [0, 0]],   V_2 = [[1/d, sqrt(1-d^-2)], [sqrt(1-d^-2), d - 1/d]].
///
/// Unitary for t = e^{-i theta}, |theta| <= 2 pi / 3; elsewhere it is still built and
/// `unitary` is false.
BraidRep tl_b3_rep(Complex t);

/// The Temperley-Lieb generators V_1, V_2 at t.
std::pair<Matrix, Matrix> tl_generators(Complex t);

/// The Fibonacci qubit: b_1 = R = diag(R^{11}_0, R^{11}_1), b_2 = F R F^-1 with F = F(1111),
/// acting on the total-charge-0 space of four Fibonacci anyons (left-associated basis).
BraidRep fib_qubit_rep();

/// Product of the letters' matrices, the leftmost letter applied first:
/// evaluate(r_1 ... r_k) = Gamma(r_k) ... Gamma(r_1).
Matrix evaluate(const BraidRep &rep, const BraidWord &word);

/// Max-entry deviation over the far-commutation pairs |i-j| >= 2 and the Yang-Baxter
/// triples of B_n.
double relation_residual(const BraidRep &rep, int strands);

/// min over unit phases c of the spectral norm of (u - c v).
double projective_distance(const Eigen::Matrix2cd &u, const Eigen::Matrix2cd &v);

struct CompiledGate {
    BraidWord word;
    double distance;
};

inline constexpr int kDefaultCompileCap = 14;

/// Exhaustive search over Fibonacci braid words of length <= max_len for the one closest
/// to `target` in projective distance. Ties go to the shorter, then lexicographically
/// smaller (by signed letter value) word.
CompiledGate compile_gate(const Eigen::Matrix2cd &target, int max_len, int cap = kDefaultCompileCap);

}  // namespace anyon

#endif
