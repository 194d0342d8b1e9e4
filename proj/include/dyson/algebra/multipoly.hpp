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

#ifndef DYSON_ALGEBRA_MULTIPOLY_HPP
#define DYSON_ALGEBRA_MULTIPOLY_HPP

#include <array>
#include <map>
#include <string>

#include "dyson/algebra/field.hpp"

namespace dyson {

/// Variables of the reduced two-degree-of-freedom phase space.
enum class Var : int { q1 = 0, q2 = 1, p1 = 2, p2 = 3 };

using Exponent = std::array<int, 4>;

inline int total_degree(const Exponent &e) { return e[0] + e[1] + e[2] + e[3]; }

/// Polynomial in (q1, q2, p1, p2) truncated at a total-degree cutoff.
/// Terms above the cutoff are dropped on construction and after every
/// operation; a product carries the smaller of the two cutoffs.
class MultiPoly {
public:
    explicit MultiPoly(int cutoff) : cutoff_(cutoff) {}
    static MultiPoly constant(const FieldElement &c, int cutoff);
    static MultiPoly variable(Var v, int cutoff);

    int cutoff() const { return cutoff_; }
    const std::map<Exponent, FieldElement> &terms() const { return terms_; }
    FieldElement coefficient(const Exponent &e) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent &e, const FieldElement &c);

    /// Sum of the terms of exactly the given total degree.
    MultiPoly homogeneous_part(int degree) const;
    MultiPoly derivative(Var v) const;
    /// Same polynomial with q1 <-> q2 and p1 <-> p2.
    MultiPoly swapped() const;
    /// Evaluate at a complex point (q1, q2, p1, p2).
    std::complex<double> evaluate(const std::array<std::complex<double>, 4> &x) const;
    double evaluate(const std::array<double, 4> &x) const;
    FieldElement evaluate(const std::array<FieldElement, 4> &x) const;

    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const FieldElement &s);
    friend bool operator==(const MultiPoly &a, const MultiPoly &b)
    {
        return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int cutoff_;
    std::map<Exponent, FieldElement> terms_;
};

MultiPoly pow(const MultiPoly &p, int k);

} // namespace dyson

#endif
