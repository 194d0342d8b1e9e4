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

#ifndef DYSON_ALGEBRA_FIELD_HPP
#define DYSON_ALGEBRA_FIELD_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dyson/algebra/mpfloat.hpp"
#include "dyson/algebra/rational.hpp"

namespace dyson {

/// Exact element of the multiquadratic field generated over Q by i and the
/// square roots of the primes.
///
/// An element is a finite sum of rational multiples of sqrt(m) with m a
/// squarefree integer; negative m stands for i*sqrt(|m|), so radicand -1 is i
/// itself. The constants of the Dyson analysis live in the subfield
/// Q(sqrt 3, sqrt 26, i), whose basis {1, sqrt3, sqrt26, sqrt78} x {1, i} is
/// exposed through tower_coords(). Larger radicands appear only when exponent
/// arithmetic needs them (for instance sqrt 7 for r = (3/16)/w^2).
class FieldElement {
public:
    using Radicand = std::int64_t;
    using Term = std::pair<Radicand, Rational>;

    FieldElement() = default;
    FieldElement(int v) : FieldElement(Rational(v)) {}
    FieldElement(long v) : FieldElement(Rational(v)) {}
    FieldElement(const Rational &q);

    static FieldElement rational(long num, long den) { return FieldElement(make_rational(num, den)); }
    /// sqrt(m) for any integer m; the square part of m is pulled out exactly.
    static FieldElement sqrt_of(long m);
    /// Principal square root of a rational: sqrt(p/q) = sqrt(p*q)/q.
    static FieldElement sqrt_of(const Rational &q);
    static FieldElement imag_unit() { return sqrt_of(-1L); }
    /// c * sqrt(m) with m already squarefree.
    static FieldElement term(Radicand m, const Rational &c);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
    std::optional<Rational> as_rational() const;
    bool is_integer() const;
    Rational coefficient(Radicand m) const;
    const std::vector<Term> &terms() const { return terms_; }

    /// True when the element lies in Q(sqrt3, sqrt26, i).
    bool in_tower() const;
    /// Coordinates over {1, sqrt3, sqrt26, sqrt78, i, i sqrt3, i sqrt26, i sqrt78}.
    std::array<Rational, 8> tower_coords() const;
    static FieldElement from_tower_coords(const std::array<Rational, 8> &c);
    static const std::array<Radicand, 8> &tower_basis();

    FieldElement conj() const;
    FieldElement inverse() const;
    /// Some square root inside the field, if one exists and can be found.
    std::optional<FieldElement> sqrt() const;

    FieldElement &operator+=(const FieldElement &o);
    FieldElement &operator-=(const FieldElement &o);
    FieldElement &operator*=(const FieldElement &o);
    FieldElement &operator/=(const FieldElement &o) { return *this *= o.inverse(); }
    FieldElement operator-() const;

    friend FieldElement operator+(FieldElement a, const FieldElement &b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement &b) { return a -= b; }
    friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator/(FieldElement a, const FieldElement &b) { return a /= b; }
    friend bool operator==(const FieldElement &a, const FieldElement &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FieldElement &a, const FieldElement &b) { return !(a == b); }

    std::complex<double> to_complex() const;
    mp::Complex to_complex(mpfr_prec_t bits) const;
    double to_double() const { return to_complex().real(); }

    /// Human-readable form, e.g. "4/9*sqrt(3) - 1/2*i".
    std::string str() const;

    /// Primes (and -1 for i) appearing in the radicands.
    std::vector<Radicand> generators() const;

private:
    std::vector<Term> terms_; // sorted by radicand order, no zero coefficients
};

inline bool is_zero(const FieldElement &x) { return x.is_zero(); }
std::ostream &operator<<(std::ostream &os, const FieldElement &x);

/// sqrt(m) * sqrt(n) = factor * sqrt(result) in the radicand convention above.
std::pair<std::int64_t, FieldElement::Radicand> multiply_radicands(FieldElement::Radicand m,
                                                                   FieldElement::Radicand n);

} // namespace dyson

#endif
