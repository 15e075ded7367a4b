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

#include "anyon/knot.h"

#include <gtest/gtest.h>

#include <climits>
#include <cmath>
#include <numbers>
#include <random>

#include "anyon/errors.h"
#include "oracles.h"

using namespace anyon;

namespace {

LaurentPoly from_map(const oracle::Poly &p) {
    LaurentPoly out;
    for (auto [e, c] : p) {
        out.add_term(e, c);
    }
    return out;
}

BraidWord random_word(std::mt19937 &rng, int strands, int len, bool mixed) {
    BraidWord w{strands, {}};
    for (int k = 0; k < len; k++) {
        int g = 1 + static_cast<int>(rng() % (strands - 1));
        w.letters.push_back(mixed && rng() % 2 ? -g : g);
    }
    return w;
}

// Every word over the given alphabet with at most max_len letters.
std::vector<BraidWord> all_words(int strands, int max_len, bool mixed) {
    std::vector<int> alphabet;
    for (int g = 1; g < strands; g++) {
        alphabet.push_back(g);
        if (mixed) {
            alphabet.push_back(-g);
        }
    }
    std::vector<BraidWord> out{{strands, {}}};
    for (size_t start = 0; start < out.size(); start++) {
        if (static_cast<int>(out[start].size()) == max_len) {
            continue;
        }
        for (int g : alphabet) {
            BraidWord w = out[start];
            w.letters.push_back(g);
            out.push_back(w);
        }
    }
    return out;
}

std::vector<Smoothing> state_of(uint64_t bits, size_t n) {
    std::vector<Smoothing> s(n);
    for (size_t k = 0; k < n; k++) {
        s[k] = (bits >> k & 1) ? Smoothing::horizontal : Smoothing::vertical;
    }
    return s;
}

Complex arc_point(int k, int count) {
    double theta = -2 * std::numbers::pi / 3 + 4 * std::numbers::pi / 3 * k / (count - 1);
    return std::polar(1.0, theta);
}

}  // namespace

TEST(laurent_poly, arithmetic) {
    LaurentPoly d = loop_value();
    EXPECT_EQ(d.terms(), (std::map<int, int64_t>{{-2, -1}, {2, -1}}));
    LaurentPoly d2 = d * d;
    EXPECT_EQ(d2.terms(), (std::map<int, int64_t>{{-4, 1}, {0, 2}, {4, 1}}));
    EXPECT_EQ(d.pow(2), d2);
    EXPECT_EQ(d.pow(0), LaurentPoly(1));
    EXPECT_TRUE((d - d).is_zero());
    EXPECT_EQ(d + d, LaurentPoly(2) * d);
    EXPECT_EQ(-d, LaurentPoly(-1) * d);
    EXPECT_EQ(d.coeff(2), -1);
    EXPECT_EQ(d.coeff(1), 0);
    LaurentPoly m = LaurentPoly::monomial(3, -1);
    EXPECT_EQ(m.pow(-2), LaurentPoly::monomial(-6, 1));
    EXPECT_EQ(m * m.pow(-1), LaurentPoly(1));
    EXPECT_THROW(d.pow(-1), InputError);
    EXPECT_TRUE(LaurentPoly::monomial(5, 0).is_zero());
}

TEST(laurent_poly, ring_axioms_on_random_polys) {
    std::mt19937 rng(8);
    auto random_poly = [&] {
        LaurentPoly p;
        for (int k = 0; k < 4; k++) {
            p.add_term(static_cast<int>(rng() % 21) - 10, static_cast<int>(rng() % 7) - 3);
        }
        return p;
    };
    for (int trial = 0; trial < 100; trial++) {
        LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        LaurentPoly ab = a * b;
        for (auto [e, coeff] : ab.terms()) {
            EXPECT_NE(coeff, 0);
        }
        Complex t = std::polar(1.0, 0.3 + trial * 0.01);
        EXPECT_NEAR(std::abs((a * b).evaluate(t) - a.evaluate(t) * b.evaluate(t)), 0, 1e-9);
    }
}

TEST(laurent_poly, overflow_and_evaluation) {
    LaurentPoly big = LaurentPoly::monomial(0, INT64_MAX);
    EXPECT_THROW(big + LaurentPoly(1), NumericError);
    EXPECT_THROW(big * LaurentPoly(2), NumericError);
    try {
        big.add_term(0, 1);
    } catch (const NumericError &) {
    }
    EXPECT_EQ(big.coeff(0), INT64_MAX);
    LaurentPoly self = loop_value();
    self += self;
    EXPECT_EQ(self, LaurentPoly(2) * loop_value());
    self -= self;
    EXPECT_TRUE(self.is_zero());
    EXPECT_THROW(loop_value().evaluate(0.0), InputError);
    EXPECT_NEAR(std::abs(loop_value().evaluate(1.0) + 2.0), 0, 1e-15);
    // t^{1/4} on the principal branch at t = -1.
    Complex q = LaurentPoly::monomial(1).evaluate(-1.0);
    EXPECT_NEAR(std::abs(q - std::polar(1.0, std::numbers::pi / 4)), 0, 1e-15);
    EXPECT_EQ(LaurentPoly().evaluate(3.0), Complex(0, 0));
}

TEST(laurent_poly, text_form) {
    EXPECT_EQ(loop_value().str(), "-t^(-1/2) - t^(1/2)");
    EXPECT_EQ((loop_value() * loop_value()).str(), "t^(-1) + 2 + t");
    EXPECT_EQ(LaurentPoly::monomial(8, 3).str(), "3*t^2");
    EXPECT_EQ(LaurentPoly().str(), "0");
}

TEST(knot, closure_and_writhe) {
    EXPECT_EQ(closure({3, {}}).crossings.size(), 0u);
    EXPECT_EQ(closure({3, {}}).strands, 3);
    LinkDiagram hopf = closure({2, {1, 1}});
    EXPECT_EQ(hopf.crossings, (std::vector<Crossing>{{1, 1}, {1, 1}}));
    EXPECT_EQ(closure({3, {1, -2}}).crossings, (std::vector<Crossing>{{1, 1}, {2, -1}}));
    EXPECT_EQ(writhe({2, {1, 1, 1}}), 3);
    EXPECT_EQ(writhe({2, {}}), 0);
    EXPECT_EQ(writhe({3, {1, -2}}), 0);
    EXPECT_THROW(closure({2, {2}}), InputError);
}

TEST(knot, smoothing_weights) {
    EXPECT_EQ(smoothing_weight(1, Smoothing::vertical), -1);
    EXPECT_EQ(smoothing_weight(1, Smoothing::horizontal), 1);
    EXPECT_EQ(smoothing_weight(-1, Smoothing::vertical), 1);
    EXPECT_EQ(smoothing_weight(-1, Smoothing::horizontal), -1);
}

TEST(knot, loop_counts_of_known_diagrams) {
    EXPECT_EQ(count_loops(closure({3, {}}), {}), 3);
    LinkDiagram hopf = closure({2, {1, 1}});
    EXPECT_EQ(count_loops(hopf, state_of(0b00, 2)), 2);
    EXPECT_EQ(count_loops(hopf, state_of(0b11, 2)), 2);
    EXPECT_EQ(count_loops(hopf, state_of(0b01, 2)), 1);
    LinkDiagram trefoil = closure({2, {1, 1, 1}});
    EXPECT_EQ(count_loops(trefoil, state_of(0b000, 3)), 2);
    EXPECT_EQ(count_loops(trefoil, state_of(0b111, 3)), 3);
    EXPECT_THROW(count_loops(trefoil, state_of(0, 2)), InputError);
}

TEST(knot, loop_counts_match_both_oracles) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 300; trial++) {
        int strands = 2 + static_cast<int>(rng() % 4);
        BraidWord w = random_word(rng, strands, static_cast<int>(rng() % 9), true);
        LinkDiagram diagram = closure(w);
        uint64_t states = uint64_t{1} << w.size();
        for (uint64_t s = 0; s < states; s += 1 + rng() % 5) {
            int loops = count_loops(diagram, state_of(s, w.size()));
            ASSERT_EQ(loops, oracle::grid_loops(w, s)) << format_braid(w) << " state " << s;
            ASSERT_EQ(loops, oracle::permutation_cycle_loops(w, s)) << format_braid(w) << " state " << s;
        }
        // All-vertical smoothing of a positive word.
        BraidWord positive = w;
        for (int &g : positive.letters) {
            g = std::abs(g);
        }
        EXPECT_EQ(count_loops(closure(positive), state_of(0, w.size())),
                  oracle::permutation_cycle_loops(positive, 0));
    }
}

TEST(knot, bracket_examples) {
    EXPECT_EQ(kauffman_bracket({1, {}}), LaurentPoly(1));
    EXPECT_EQ(kauffman_bracket({3, {}}), loop_value() * loop_value());
    LaurentPoly d = loop_value();
    // t^{1/4} d + t^{-1/4} d^2
    EXPECT_EQ(kauffman_bracket({3, {1}}), LaurentPoly::monomial(1) * d + LaurentPoly::monomial(-1) * d * d);
    EXPECT_EQ(kauffman_bracket({3, {1}}).terms(), (std::map<int, int64_t>{{-5, 1}, {-1, 1}}));
}

TEST(knot, jones_examples) {
    EXPECT_EQ(jones({1, {}}), LaurentPoly(1));
    EXPECT_EQ(jones({2, {1, -1}}), loop_value());
    EXPECT_EQ(jones({2, {}}), loop_value());
    // Right-handed trefoil: t + t^3 - t^4.
    EXPECT_EQ(jones({2, {1, 1, 1}}).terms(), (std::map<int, int64_t>{{4, 1}, {12, 1}, {16, -1}}));
    EXPECT_EQ(jones({3, {1, 1, 1, 2}}), jones({2, {1, 1, 1}}));
    EXPECT_EQ(jones({2, {1, 1, 1}}), from_map(oracle::mul(oracle::Poly{{9, -1}}, oracle::bracket_by_states({2, {1, 1, 1}}))));
    // The mirror image swaps t and 1/t.
    LaurentPoly left = jones({2, {-1, -1, -1}});
    EXPECT_EQ(left.terms(), (std::map<int, int64_t>{{-16, -1}, {-12, 1}, {-4, 1}}));
    // Figure-eight knot is amphichiral.
    LaurentPoly fig8 = jones({3, {1, -2, 1, -2}});
    for (auto [e, c] : fig8.terms()) {
        EXPECT_EQ(fig8.coeff(-e), c);
    }
}

TEST(knot, bracket_matches_state_oracle) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 150; trial++) {
        int strands = 2 + static_cast<int>(rng() % 4);
        BraidWord w = random_word(rng, strands, static_cast<int>(rng() % 11), true);
        EXPECT_EQ(kauffman_bracket(w), from_map(oracle::bracket_by_states(w))) << format_braid(w);
    }
}

TEST(knot, bracket_is_schedule_independent) {
    std::mt19937 rng(2);
    BraidWord w = random_word(rng, 4, 18, true);
    LaurentPoly one = kauffman_bracket(w, {.cap = 24, .threads = 1});
    for (unsigned threads : {2u, 3u, 7u, 16u}) {
        EXPECT_EQ(kauffman_bracket(w, {.cap = 24, .threads = threads}), one);
    }
}

TEST(knot, bracket_cap) {
    BraidWord w{2, std::vector<int>(25, 1)};
    EXPECT_THROW(kauffman_bracket(w), ResourceError);
    EXPECT_THROW(jones(w), ResourceError);
    BraidWord small{2, std::vector<int>(6, 1)};
    EXPECT_THROW(kauffman_bracket(small, {.cap = 5}), ResourceError);
    EXPECT_NO_THROW(kauffman_bracket(small, {.cap = 6}));
}

TEST(knot, braid_relation_invariance) {
    for (const BraidWord &w : all_words(4, 5, true)) {
        LaurentPoly base = kauffman_bracket(w);
        for (size_t k = 0; k + 3 <= w.size(); k++) {
            int a = w.letters[k], b = w.letters[k + 1], c = w.letters[k + 2];
            if (a != c || (a > 0) != (b > 0) || std::abs(std::abs(a) - std::abs(b)) != 1) {
                continue;
            }
            BraidWord moved = w;
            moved.letters[k] = b;
            moved.letters[k + 1] = a;
            moved.letters[k + 2] = b;
            ASSERT_EQ(kauffman_bracket(moved), base) << format_braid(w);
        }
    }
}

TEST(knot, braid_relation_inserted_in_random_words) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; trial++) {
        int strands = 3 + static_cast<int>(rng() % 3);
        BraidWord prefix = random_word(rng, strands, static_cast<int>(rng() % 3), true);
        BraidWord suffix = random_word(rng, strands, static_cast<int>(rng() % 3), true);
        int i = 1 + static_cast<int>(rng() % (strands - 2));
        int sign = rng() % 2 ? 1 : -1;
        BraidWord lhs = prefix, rhs = prefix;
        for (int g : {i, i + 1, i}) {
            lhs.letters.push_back(sign * g);
        }
        for (int g : {i + 1, i, i + 1}) {
            rhs.letters.push_back(sign * g);
        }
        lhs.letters.insert(lhs.letters.end(), suffix.letters.begin(), suffix.letters.end());
        rhs.letters.insert(rhs.letters.end(), suffix.letters.begin(), suffix.letters.end());
        ASSERT_EQ(kauffman_bracket(lhs), kauffman_bracket(rhs));
        ASSERT_EQ(jones(lhs), jones(rhs));
    }
}

TEST(knot, far_commutation_invariance) {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 300; trial++) {
        BraidWord w = random_word(rng, 5, 2 + static_cast<int>(rng() % 7), true);
        LaurentPoly base = kauffman_bracket(w);
        for (size_t k = 0; k + 1 < w.size(); k++) {
            if (std::abs(std::abs(w.letters[k]) - std::abs(w.letters[k + 1])) < 2) {
                continue;
            }
            BraidWord swapped = w;
            std::swap(swapped.letters[k], swapped.letters[k + 1]);
            ASSERT_EQ(kauffman_bracket(swapped), base);
        }
    }
}

TEST(knot, markov_invariance_of_jones) {
    auto check = [](const BraidWord &w) {
        LaurentPoly j = jones(w);
        for (int sign : {1, -1}) {
            BraidWord up{w.strands + 1, w.letters};
            up.letters.push_back(sign * w.strands);
            ASSERT_EQ(jones(up), j) << format_braid(w);
            if (sign == 1) {
                EXPECT_NE(kauffman_bracket(up), kauffman_bracket(w));
            }
        }
    };
    for (const BraidWord &w : all_words(3, 5, true)) {
        check(w);
    }
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; trial++) {
        check(random_word(rng, 2 + static_cast<int>(rng() % 3), 6 + static_cast<int>(rng() % 3), true));
    }
}

TEST(knot, conjugation_invariance) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; trial++) {
        BraidWord w = random_word(rng, 4, static_cast<int>(rng() % 7), true);
        int g = (1 + static_cast<int>(rng() % 3)) * (rng() % 2 ? 1 : -1);
        BraidWord conj{4, {g}};
        conj.letters.insert(conj.letters.end(), w.letters.begin(), w.letters.end());
        conj.letters.push_back(-g);
        EXPECT_EQ(jones(conj), jones(w));
    }
}

TEST(knot, tl_trace_examples) {
    for (int k = 0; k < 5; k++) {
        Complex t = arc_point(k, 5);
        Complex q = std::exp(std::log(t) / 4.0);
        Complex d = -1.0 / (q * q) - q * q;
        EXPECT_NEAR(std::abs(bracket_tl_b3({3, {}}, t) - d * d), 0, 1e-12);
        EXPECT_NEAR(std::abs(bracket_tl_b3({3, {1}}, t) - (d * d / q + q * d)), 0, 1e-12);
    }
    EXPECT_THROW(bracket_tl_b3({2, {1}}, 1.0), InputError);
}

TEST(knot, tl_trace_matches_state_sum_positive_words) {
    for (const BraidWord &w : all_words(3, 6, false)) {
        LaurentPoly bracket = kauffman_bracket(w);
        for (int k = 0; k < 20; k++) {
            Complex t = arc_point(k, 20);
            ASSERT_NEAR(std::abs(bracket_tl_b3(w, t) - bracket.evaluate(t)), 0, 1e-9) << format_braid(w);
        }
    }
}

TEST(knot, tl_trace_matches_state_sum_mixed_words) {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 200; trial++) {
        BraidWord w = random_word(rng, 3, static_cast<int>(rng() % 9), true);
        LaurentPoly bracket = kauffman_bracket(w);
        for (int k = 0; k < 20; k++) {
            Complex t = arc_point(k, 20);
            ASSERT_NEAR(std::abs(bracket_tl_b3(w, t) - bracket.evaluate(t)), 0, 1e-9) << format_braid(w);
        }
        // Off the unit circle the identity is still polynomial.
        Complex generic(0.8, 0.9);
        EXPECT_NEAR(std::abs(bracket_tl_b3(w, generic) - bracket.evaluate(generic)), 0,
                    1e-9 * std::max(1.0, std::abs(bracket.evaluate(generic))));
    }
}
