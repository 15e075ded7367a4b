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

#ifndef ANYON_LAURENT_POLY_H
#define ANYON_LAURENT_POLY_H

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace anyon {

/// An integer Laurent polynomial in q = t^{1/4}. Exponents are in quarter units of t.
/// Zero coefficients are never stored.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(int64_t constant);

    /// coeff * t^{quarter_exponent / 4}
    static LaurentPoly monomial(int quarter_exponent, int64_t coeff = 1);

    const std::map<int, int64_t> &terms() const {
        return terms_;
    }
    int64_t coeff(int quarter_exponent) const;
    bool is_zero() const {
        return terms_.empty();
    }
    void add_term(int quarter_exponent, int64_t coeff);

    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);
    LaurentPoly &operator*=(const LaurentPoly &other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) {
        return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) {
        return a -= b;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    LaurentPoly operator-() const;
    LaurentPoly pow(int n) const;
    bool operator==(const LaurentPoly &) const = default;

    /// Value at t, with t^{1/4} taken on the principal branch.
    std::complex<double> evaluate(std::complex<double> t) const;

    /// Human-readable form such as "-t^(-1/2) - t^(1/2)".
    std::string str() const;

   private:
    std::map<int, int64_t> terms_;
};

/// d = -t^{-1/2} - t^{1/2}
LaurentPoly loop_value();

}  // namespace anyon

#endif
