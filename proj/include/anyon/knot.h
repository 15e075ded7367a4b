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

#ifndef ANYON_KNOT_H
#define ANYON_KNOT_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "anyon/braid.h"
#include "anyon/laurent_poly.h"

namespace anyon {

struct Crossing {
    /// Strand positions `position` and `position + 1` (1-based) cross.
    int position;
    int sign;
    bool operator==(const Crossing &) const = default;
};

/// A braid diagram read top to bottom, closed by joining each top endpoint to the bottom
/// endpoint at the same position.
struct LinkDiagram {
    int strands = 1;
    std::vector<Crossing> crossings;
    bool operator==(const LinkDiagram &) const = default;
};

LinkDiagram closure(const BraidWord &word);
int writhe(const BraidWord &word);

/// Per-crossing choice. `vertical` reconnects each strand to itself (the identity
/// smoothing); `horizontal` joins the two top ends and the two bottom ends (cup-cap).
enum class Smoothing : uint8_t { vertical = 0, horizontal = 1 };

/// Quarter-unit exponent of the weight of a smoothing: a positive crossing weighs
/// t^{-1/4} smoothed vertically and t^{1/4} horizontally; a negative one the reverse.
int smoothing_weight(int crossing_sign, Smoothing s);

/// Number of closed loops after smoothing every crossing as given.
int count_loops(const LinkDiagram &diagram, std::span<const Smoothing> state);

inline constexpr int kDefaultBracketCap = 24;

struct BracketOptions {
    int cap = kDefaultBracketCap;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Exact state sum sum_S <K|S> d^{L(S)-1}. Throws ResourceError above `cap` crossings.
LaurentPoly kauffman_bracket(const BraidWord &word, BracketOptions options = {});

/// (-t^{-3/4})^{-w} times the bracket.
LaurentPoly jones(const BraidWord &word, BracketOptions options = {});

/// (t^{-1/4})^w (d^2 - 2) + Tr[Gamma(r_k) ... Gamma(r_1)] for a word in B_3 with writhe w,
/// using the two-dimensional Temperley-Lieb representation.
std::complex<double> bracket_tl_b3(const BraidWord &word, std::complex<double> t);

}  // namespace anyon

#endif
