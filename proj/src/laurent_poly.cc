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

#include "anyon/laurent_poly.h"

#include <cmath>
#include <numeric>

#include "anyon/errors.h"

namespace anyon {

LaurentPoly::LaurentPoly(int64_t constant) {
    add_term(0, constant);
}

LaurentPoly LaurentPoly::monomial(int quarter_exponent, int64_t coeff) {
    LaurentPoly p;
    p.add_term(quarter_exponent, coeff);
    return p;
}

int64_t LaurentPoly::coeff(int quarter_exponent) const {
    auto it = terms_.find(quarter_exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int quarter_exponent, int64_t coeff) {
    if (coeff == 0) {
        return;
    }
    int64_t sum;
    if (__builtin_add_overflow(this->coeff(quarter_exponent), coeff, &sum)) {
        throw NumericError("Laurent polynomial coefficient overflow");
    }
    if (sum == 0) {
        terms_.erase(quarter_exponent);
    } else {
        terms_[quarter_exponent] = sum;
    }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other) {
    if (&other == this) {
        return *this += LaurentPoly(other);
    }
    for (auto [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other) {
    if (&other == this) {
        terms_.clear();
        return *this;
    }
    for (auto [e, c] : other.terms_) {
        if (c == INT64_MIN) {
            throw NumericError("Laurent polynomial coefficient overflow");
        }
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly out;
    for (auto [ea, ca] : a.terms_) {
        for (auto [eb, cb] : b.terms_) {
            int64_t c;
            if (__builtin_mul_overflow(ca, cb, &c)) {
                throw NumericError("Laurent polynomial coefficient overflow");
            }
            out.add_term(ea + eb, c);
        }
    }
    return out;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other) {
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    return LaurentPoly() - *this;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) {
        if (terms_.size() != 1 || std::abs(terms_.begin()->second) != 1) {
            throw InputError("only unit monomials have Laurent polynomial inverses");
        }
        auto [e, c] = *terms_.begin();
        return monomial(-e, c).pow(-n);
    }
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> t) const {
    if (terms_.empty()) {
        return 0;
    }
    if (t == std::complex<double>{0, 0}) {
        throw InputError("cannot evaluate a Laurent polynomial at t = 0");
    }
    std::complex<double> q = std::exp(std::log(t) / 4.0);
    std::complex<double> sum = 0;
    for (auto [e, c] : terms_) {
        sum += static_cast<double>(c) * std::pow(q, e);
    }
    return sum;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto [e, c] : terms_) {
        int64_t mag = c < 0 ? -c : c;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) {
            out += std::to_string(mag) + "*";
        }
        int g = std::gcd(e, 4);
        int num = e / g;
        int den = 4 / g;
        if (den == 1) {
            out += num == 1 ? "t" : "t^" + (num < 0 ? "(" + std::to_string(num) + ")" : std::to_string(num));
        } else {
            out += "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
        }
    }
    return out;
}

LaurentPoly loop_value() {
    return LaurentPoly::monomial(-2, -1) + LaurentPoly::monomial(2, -1);
}

}  // namespace anyon
