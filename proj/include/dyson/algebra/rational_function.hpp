// Copyright 2026 The dyson-galois Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DYSON_ALGEBRA_RATIONAL_FUNCTION_HPP
#define DYSON_ALGEBRA_RATIONAL_FUNCTION_HPP

#include <ostream>
#include <string>

#include "dyson/algebra/poly.hpp"

namespace dyson {

/// Quotient of exact polynomials in canonical form: gcd(num, den) = 1 and
/// den monic. Equality of canonical forms is equality of functions.
class RationalFunction {
public:
    RationalFunction() : den_(ExactPoly::constant(1)) {}
    RationalFunction(const FieldElement &c) : num_(ExactPoly::constant(c)), den_(ExactPoly::constant(1)) {}
    RationalFunction(int c) : RationalFunction(FieldElement(c)) {}
    RationalFunction(ExactPoly num) : num_(std::move(num)), den_(ExactPoly::constant(1)) {}
    RationalFunction(ExactPoly num, ExactPoly den);

    static RationalFunction variable() { return RationalFunction(ExactPoly::x()); }

    const ExactPoly &num() const { return num_; }
    const ExactPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// deg den - deg num; meaningless (and rejected) for the zero function.
    int order_at_infinity() const;

    FieldElement operator()(const FieldElement &w) const;

    RationalFunction derivative() const;

    RationalFunction &operator+=(const RationalFunction &o);
    RationalFunction &operator-=(const RationalFunction &o);
    RationalFunction &operator*=(const RationalFunction &o);
    RationalFunction &operator/=(const RationalFunction &o);
    RationalFunction operator-() const;

    friend RationalFunction operator+(RationalFunction a, const RationalFunction &b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction &b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction &b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction &b) { return a /= b; }
    friend bool operator==(const RationalFunction &a, const RationalFunction &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction &a, const RationalFunction &b) { return !(a == b); }

    /// f(w + shift).
    RationalFunction shifted(const FieldElement &shift) const;

    std::string str(const std::string &var = "w") const;

private:
    ExactPoly num_;
    ExactPoly den_;
};

std::ostream &operator<<(std::ostream &os, const RationalFunction &f);

} // namespace dyson

#endif
