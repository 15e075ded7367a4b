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

#include "anyon/braid.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "anyon/errors.h"
#include "anyon/fr_symbols.h"

namespace anyon {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    bool done() const {
        return pos >= text.size();
    }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    }
    void expect(char c, const char *what) {
        if (done() || text[pos] != c) {
            throw ParseError(std::string("expected ") + what, pos);
        }
        pos++;
    }
    int number() {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (start == pos || ec != std::errc()) {
            throw ParseError("expected a positive integer", start);
        }
        return value;
    }
};

}  // namespace

BraidWord parse_braid(std::string_view text) {
    Cursor cur{text};
    cur.skip_space();
    cur.expect('B', "'B' header");
    size_t strands_at = cur.pos;
    BraidWord word;
    word.strands = cur.number();
    if (word.strands < 1) {
        throw ParseError("strand count must be at least 1", strands_at);
    }
    cur.expect(':', "':' after strand count");
    while (true) {
        size_t before = cur.pos;
        cur.skip_space();
        if (cur.done()) {
            break;
        }
        if (cur.pos == before) {
            throw ParseError("expected whitespace between tokens", cur.pos);
        }
        size_t token_at = cur.pos;
        cur.expect('s', "generator token 'sK'");
        int k = cur.number();
        int sign = 1;
        if (!cur.done() && cur.text[cur.pos] == '^') {
            cur.pos++;
            cur.expect('-', "'-1' exponent");
            cur.expect('1', "'-1' exponent");
            sign = -1;
        }
        if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.text[cur.pos]))) {
            throw ParseError("unexpected character", cur.pos);
        }
        if (k < 1 || k >= word.strands) {
            throw InputError(
                "generator s" + std::to_string(k) + " at byte " + std::to_string(token_at) + " is out of range for B" +
                std::to_string(word.strands));
        }
        word.letters.push_back(sign * k);
    }
    return word;
}

std::string format_braid(const BraidWord &word) {
    std::string out = "B" + std::to_string(word.strands) + ":";
    for (int g : word.letters) {
        out += " s" + std::to_string(std::abs(g));
        if (g < 0) {
            out += "^-1";
        }
    }
    return out;
}

BraidWord inverse(const BraidWord &word) {
    BraidWord out{word.strands, {}};
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        out.letters.push_back(-*it);
    }
    return out;
}

int letter_sign_sum(const BraidWord &word) {
    int w = 0;
    for (int g : word.letters) {
        w += g > 0 ? 1 : -1;
    }
    return w;
}

const Matrix &BraidRep::letter(int g) const {
    if (g == 0) {
        throw InputError("braid letter 0 is not a generator");
    }
    size_t idx = strands == 0 ? 0 : static_cast<size_t>(std::abs(g) - 1);
    if (idx >= generators.size()) {
        throw InputError("representation '" + name + "' has no generator b" + std::to_string(std::abs(g)));
    }
    return g > 0 ? generators[idx] : inverses[idx];
}

namespace {

bool is_unitary(const Matrix &m) {
    Matrix id = Matrix::Identity(m.rows(), m.cols());
    return ((m * m.adjoint()) - id).cwiseAbs().maxCoeff() < 1e-10;
}

void finish(BraidRep &rep) {
    rep.unitary = std::all_of(rep.generators.begin(), rep.generators.end(), is_unitary);
}

}  // namespace

BraidRep abelian_rep(double phi) {
    BraidRep rep;
    rep.name = "abelian";
    rep.dimension = 1;
    rep.strands = 0;
    Matrix b(1, 1);
    b(0, 0) = std::polar(1.0, phi);
    Matrix binv(1, 1);
    binv(0, 0) = std::polar(1.0, -phi);
    rep.generators = {b};
    rep.inverses = {binv};
    finish(rep);
    return rep;
}

TLParameters tl_parameters(Complex t) {
    if (t == Complex{0, 0}) {
        throw InputError("the Temperley-Lieb parameter t must be nonzero");
    }
    Complex q = std::exp(std::log(t) / 4.0);
    Complex sqrt_t = q * q;
    return {t, q, -1.0 / sqrt_t - sqrt_t};
}

std::pair<Matrix, Matrix> tl_generators(Complex t) {
    TLParameters p = tl_parameters(t);
    Complex d = p.d;
    // d^2 - 1 = 1/t + 1 + t. At the ends of the unitarity arc it vanishes, and the square
    // root would turn rounding noise of order eps into an entry of order sqrt(eps).
    Complex q2 = p.quarter_root * p.quarter_root;
    Complex gap = q2 * q2 + 1.0 + 1.0 / (q2 * q2);
    if (std::abs(gap) < 64 * std::numeric_limits<double>::epsilon() * (2 + std::abs(t) + 1 / std::abs(t))) {
        gap = 0;
    }
    Complex off = std::sqrt(gap) / d;
    Matrix v1 = Matrix::Zero(2, 2);
    v1(0, 0) = d;
    Matrix v2(2, 2);
    v2 << 1.0 / d, off, off, d - 1.0 / d;
    return {v1, v2};
}

BraidRep tl_b3_rep(Complex t) {
    TLParameters p = tl_parameters(t);
    auto [v1, v2] = tl_generators(t);
    Matrix id = Matrix::Identity(2, 2);
    BraidRep rep;
    rep.name = "tl";
    rep.dimension = 2;
    rep.strands = 3;
    // V^2 = d V makes (t^{-1/4} + t^{1/4} V)^-1 = t^{1/4} + t^{-1/4} V exactly.
    for (const Matrix &v : {v1, v2}) {
        rep.generators.push_back(id / p.quarter_root + p.quarter_root * v);
        rep.inverses.push_back(id * p.quarter_root + v / p.quarter_root);
    }
    finish(rep);
    return rep;
}

BraidRep fib_qubit_rep() {
    FibonacciData fib = fibonacci_data();
    auto fm = fibonacci_f_matrix(fib.f);
    Matrix f(2, 2);
    f << fm[0][0], fm[0][1], fm[1][0], fm[1][1];
    Matrix r = Matrix::Zero(2, 2);
    r(0, 0) = fib.r(1, 1, 0);
    r(1, 1) = fib.r(1, 1, 1);
    Matrix b2 = f * r * f.inverse();

    BraidRep rep;
    rep.name = "fib";
    rep.dimension = 2;
    rep.strands = 3;
    rep.generators = {r, b2};
    rep.inverses = {r.adjoint(), b2.inverse()};
    finish(rep);
    return rep;
}

Matrix evaluate(const BraidRep &rep, const BraidWord &word) {
    if (rep.strands != 0 && word.strands != rep.strands) {
        throw InputError(
            "word on " + std::to_string(word.strands) + " strands does not match representation '" + rep.name +
            "' on " + std::to_string(rep.strands));
    }
    Matrix acc = Matrix::Identity(rep.dimension, rep.dimension);
    for (int g : word.letters) {
        if (std::abs(g) >= word.strands) {
            throw InputError("letter " + std::to_string(g) + " out of range for B" + std::to_string(word.strands));
        }
        acc = rep.letter(g) * acc;
    }
    return acc;
}

double relation_residual(const BraidRep &rep, int strands) {
    if (strands < 1) {
        throw InputError("strand count must be positive");
    }
    if (rep.strands != 0 && strands > rep.strands) {
        throw InputError("representation '" + rep.name + "' only defines B" + std::to_string(rep.strands));
    }
    auto dev = [](const Matrix &x, const Matrix &y) { return (x - y).cwiseAbs().maxCoeff(); };
    double worst = 0;
    for (int i = 1; i < strands; i++) {
        for (int j = i + 2; j < strands; j++) {
            const Matrix &bi = rep.letter(i);
            const Matrix &bj = rep.letter(j);
            worst = std::max(worst, dev(bi * bj, bj * bi));
        }
        if (i + 1 < strands) {
            const Matrix &a = rep.letter(i);
            const Matrix &b = rep.letter(i + 1);
            worst = std::max(worst, dev(a * b * a, b * a * b));
        }
    }
    return worst;
}

double projective_distance(const Eigen::Matrix2cd &u, const Eigen::Matrix2cd &v) {
    // ||u - c v|| = ||v^dag u - c||; for the unitary w = v^dag u with eigenphase gap delta
    // the optimal phase sits midway and the distance is 2 sin(delta / 4).
    Eigen::Matrix2cd w = v.adjoint() * u;
    Complex diff = w(0, 0) - w(1, 1);
    Complex root = std::sqrt(diff * diff + 4.0 * w(0, 1) * w(1, 0));
    Complex trace = w(0, 0) + w(1, 1);
    double delta = std::abs(std::arg((trace + root) * std::conj(trace - root)));
    return 2 * std::sin(delta / 4);
}

CompiledGate compile_gate(const Eigen::Matrix2cd &target, int max_len, int cap) {
    if (max_len < 0) {
        throw InputError("max_len must be non-negative");
    }
    if (max_len > cap) {
        throw ResourceError("max_len " + std::to_string(max_len) + " exceeds the search cap " + std::to_string(cap));
    }
    if (((target * target.adjoint()) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InputError("compile target is not unitary");
    }

    BraidRep rep = fib_qubit_rep();
    constexpr int kLetters[4] = {-2, -1, 1, 2};
    Eigen::Matrix2cd mats[4];
    for (int k = 0; k < 4; k++) {
        mats[k] = rep.letter(kLetters[k]);
    }

    std::vector<int> word;
    word.reserve(max_len);
    CompiledGate best{{3, {}}, projective_distance(target, Eigen::Matrix2cd::Identity())};

    auto better = [&](double dist) {
        if (dist != best.distance) {
            return dist < best.distance;
        }
        if (word.size() != best.word.letters.size()) {
            return word.size() < best.word.letters.size();
        }
        return word < best.word.letters;
    };

    // Preorder over freely reduced words with ascending letters; a word containing
    // g g^-1 equals a shorter word, which always wins the tie-break.
    auto recurse = [&](auto &self, const Eigen::Matrix2cd &acc) -> void {
        if (static_cast<int>(word.size()) == max_len) {
            return;
        }
        for (int k = 0; k < 4; k++) {
            if (!word.empty() && word.back() == -kLetters[k]) {
                continue;
            }
            Eigen::Matrix2cd next = mats[k] * acc;
            word.push_back(kLetters[k]);
            double dist = projective_distance(target, next);
            if (better(dist)) {
                best.word.letters = word;
                best.distance = dist;
            }
            self(self, next);
            word.pop_back();
        }
    };
    recurse(recurse, Eigen::Matrix2cd::Identity());
    return best;
}

}  // namespace anyon
