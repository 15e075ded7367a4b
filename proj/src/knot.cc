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

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "anyon/errors.h"

namespace anyon {

LinkDiagram closure(const BraidWord &word) {
    LinkDiagram out{word.strands, {}};
    out.crossings.reserve(word.letters.size());
    for (int g : word.letters) {
        if (g == 0 || std::abs(g) >= word.strands) {
            throw InputError("letter " + std::to_string(g) + " out of range for B" + std::to_string(word.strands));
        }
        out.crossings.push_back({std::abs(g), g > 0 ? 1 : -1});
    }
    return out;
}

int writhe(const BraidWord &word) {
    return letter_sign_sum(word);
}

int smoothing_weight(int crossing_sign, Smoothing s) {
    int w = s == Smoothing::vertical ? -1 : 1;
    return crossing_sign > 0 ? w : -w;
}

namespace {

// Each crossing has four endpoints; the closure wiring pairs them into 2N arcs. A state
// then joins arcs pairwise at every crossing, and loops are the resulting components.
struct ArcGraph {
    // arcs[4k + j] is the arc through endpoint j (0 top-left, 1 top-right,
    // 2 bottom-left, 3 bottom-right) of crossing k.
    std::vector<uint32_t> arcs;
    uint32_t arc_count = 0;
    int free_loops = 0;
};

ArcGraph build_arcs(const LinkDiagram &diagram) {
    size_t n = diagram.crossings.size();
    ArcGraph g;
    g.arcs.assign(4 * n, UINT32_MAX);
    std::vector<std::vector<uint32_t>> on_position(diagram.strands);
    for (size_t k = 0; k < n; k++) {
        int p = diagram.crossings[k].position;
        on_position[p - 1].push_back(static_cast<uint32_t>(4 * k));
        on_position[p].push_back(static_cast<uint32_t>(4 * k + 1));
    }
    for (const auto &tops : on_position) {
        if (tops.empty()) {
            g.free_loops++;
            continue;
        }
        // Bottom of each crossing meets the top of the next one at this position;
        // the closure wraps the last bottom back to the first top.
        for (size_t i = 0; i < tops.size(); i++) {
            uint32_t bottom = tops[i] + 2;
            uint32_t next_top = tops[(i + 1) % tops.size()];
            g.arcs[bottom] = g.arc_count;
            g.arcs[next_top] = g.arc_count;
            g.arc_count++;
        }
    }
    return g;
}

class ArcUnion {
   public:
    explicit ArcUnion(uint32_t n) : parent_(n) {
    }
    void reset() {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }
    uint32_t find(uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[a] = b;
        return true;
    }

   private:
    std::vector<uint32_t> parent_;
};

int loops_of_state(const ArcGraph &g, ArcUnion &uf, uint64_t state_bits, size_t crossings) {
    uf.reset();
    int merges = 0;
    for (size_t k = 0; k < crossings; k++) {
        const uint32_t *e = &g.arcs[4 * k];
        if ((state_bits >> k) & 1) {
            merges += uf.unite(e[0], e[1]);
            merges += uf.unite(e[2], e[3]);
        } else {
            merges += uf.unite(e[0], e[2]);
            merges += uf.unite(e[1], e[3]);
        }
    }
    return static_cast<int>(g.arc_count) - merges + g.free_loops;
}

}  // namespace

int count_loops(const LinkDiagram &diagram, std::span<const Smoothing> state) {
    size_t n = diagram.crossings.size();
    if (state.size() != n) {
        throw InputError("smoothing state length does not match the crossing count");
    }
    ArcGraph g = build_arcs(diagram);
    ArcUnion uf(g.arc_count);
    uf.reset();
    int merges = 0;
    for (size_t k = 0; k < n; k++) {
        const uint32_t *e = &g.arcs[4 * k];
        if (state[k] == Smoothing::horizontal) {
            merges += uf.unite(e[0], e[1]);
            merges += uf.unite(e[2], e[3]);
        } else {
            merges += uf.unite(e[0], e[2]);
            merges += uf.unite(e[1], e[3]);
        }
    }
    return static_cast<int>(g.arc_count) - merges + g.free_loops;
}

LaurentPoly kauffman_bracket(const BraidWord &word, BracketOptions options) {
    LinkDiagram diagram = closure(word);
    size_t n = diagram.crossings.size();
    if (static_cast<int64_t>(n) > options.cap || n > 62) {
        throw ResourceError(
            "bracket state sum over " + std::to_string(n) + " crossings exceeds the cap of " +
            std::to_string(options.cap));
    }
    ArcGraph g = build_arcs(diagram);
    int max_loops = static_cast<int>(g.arc_count) + g.free_loops;
    size_t width = static_cast<size_t>(max_loops) + 1;

    // The weight exponent of a state only depends on how many crossings contribute t^{+1/4};
    // accumulate a histogram over (that count, loops) and expand it once at the end.
    uint64_t positive_mask = 0;
    for (size_t k = 0; k < n; k++) {
        if (diagram.crossings[k].sign > 0) {
            positive_mask |= uint64_t{1} << k;
        }
    }
    auto raising = [&](uint64_t bits) {
        // horizontal on a positive crossing or vertical on a negative one gives t^{+1/4}
        return std::popcount(~(bits ^ positive_mask) & ((n == 64 ? 0 : (uint64_t{1} << n)) - 1));
    };

    uint64_t total = uint64_t{1} << n;
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(1, total >> 12)));
    std::vector<std::vector<uint64_t>> hist(threads, std::vector<uint64_t>((n + 1) * width, 0));

    auto work = [&](unsigned t) {
        uint64_t begin = total * t / threads;
        uint64_t end = total * (t + 1) / threads;
        ArcUnion uf(g.arc_count);
        auto &h = hist[t];
        if (begin == end) {
            return;
        }
        // Gray-code walk: consecutive states differ in one crossing.
        uint64_t bits = begin ^ (begin >> 1);
        int up = raising(bits);
        for (uint64_t i = begin;; i++) {
            int loops = loops_of_state(g, uf, bits, n);
            h[static_cast<size_t>(up) * width + loops]++;
            if (i + 1 == end) {
                break;
            }
            int flip = std::countr_zero(i + 1);
            bits ^= uint64_t{1} << flip;
            bool now_horizontal = (bits >> flip) & 1;
            bool positive = (positive_mask >> flip) & 1;
            up += now_horizontal == positive ? 1 : -1;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    LaurentPoly d = loop_value();
    std::vector<LaurentPoly> d_pow(width);
    for (int l = 1; l <= max_loops; l++) {
        d_pow[l] = d.pow(l - 1);
    }
    LaurentPoly result;
    for (size_t up = 0; up <= n; up++) {
        int exponent = static_cast<int>(2 * up) - static_cast<int>(n);
        LaurentPoly row;
        for (int l = 1; l <= max_loops; l++) {
            uint64_t count = 0;
            for (const auto &h : hist) {
                count += h[up * width + l];
            }
            if (count) {
                row += d_pow[l] * LaurentPoly(static_cast<int64_t>(count));
            }
        }
        result += row * LaurentPoly::monomial(exponent);
    }
    return result;
}

LaurentPoly jones(const BraidWord &word, BracketOptions options) {
    int w = writhe(word);
    LaurentPoly prefactor = LaurentPoly::monomial(3 * w, (w % 2) ? -1 : 1);
    return prefactor * kauffman_bracket(word, options);
}

std::complex<double> bracket_tl_b3(const BraidWord &word, std::complex<double> t) {
    if (word.strands != 3) {
        throw InputError("the Temperley-Lieb trace formula needs a word in B3, got B" + std::to_string(word.strands));
    }
    TLParameters p = tl_parameters(t);
    Matrix product = evaluate(tl_b3_rep(t), word);
    return std::pow(p.quarter_root, -writhe(word)) * (p.d * p.d - 2.0) + product.trace();
}

}  // namespace anyon
