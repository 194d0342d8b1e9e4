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

#ifndef DYSON_ALGEBRA_POLY_HPP
#define DYSON_ALGEBRA_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dyson/algebra/field.hpp"

namespace dyson {

// Zero and one for the coefficient types used with Poly.
template <class T> struct ScalarTraits {
    static T zero() { return T(0); }
    static T one() { return T(1); }
    static T from_int(long k) { return T(k); }
};

template <> struct ScalarTraits<mp::Complex> {
    static mp::Complex zero() { return mp::Complex(); }
    static mp::Complex one() { return mp::Complex(1.0, 0.0, mp::Float::default_bits); }
    static mp::Complex from_int(long k) { return mp::Complex(static_cast<double>(k), 0.0, mp::Float::default_bits); }
};

namespace detail {
template <class T> bool coeff_is_zero(const T &x) { return is_zero(x); }
} // namespace detail

/// Dense univariate polynomial, coefficients stored from low to high degree.
/// The coefficient vector never ends in an (exact) zero.
template <class T> class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
    static Poly monomial(T c, int k)
    {
        std::vector<T> v(static_cast<std::size_t>(k) + 1, ScalarTraits<T>::zero());
        v.back() = std::move(c);
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(ScalarTraits<T>::one(), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T> &coeffs() const { return c_; }
    T coeff(int k) const
    {
        if (k < 0 || k > degree()) return ScalarTraits<T>::zero();
        return c_[static_cast<std::size_t>(k)];
    }
    const T &leading() const { return c_.back(); }

    T operator()(const T &x) const
    {
        T acc = ScalarTraits<T>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const
    {
        std::vector<T> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * ScalarTraits<T>::from_int(static_cast<long>(k)));
        return Poly(std::move(d));
    }

    Poly monic() const
    {
        if (is_zero()) return *this;
        const T inv = ScalarTraits<T>::one() / leading();
        return *this * inv;
    }

    Poly &operator+=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ScalarTraits<T>::zero());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ScalarTraits<T>::zero());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly operator-() const
    {
        Poly r(*this);
        for (auto &c : r.c_) c = -c;
        return r;
    }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, ScalarTraits<T>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(Poly a, const T &s)
    {
        for (auto &c : a.c_) c = c * s;
        a.trim();
        return a;
    }
    friend Poly operator*(const T &s, Poly a) { return std::move(a) * s; }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }
    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    /// p(w + shift).
    Poly taylor_shift(const T &shift) const
    {
        // Horner in the polynomial ring: ((c_n)(w+s) + c_{n-1})(w+s) + ...
        const Poly lin{shift, ScalarTraits<T>::one()};
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly::constant(*it);
        return acc;
    }

    /// p(q(w)).
    Poly compose(const Poly &q) const
    {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly::constant(*it);
        return acc;
    }

    /// w^deg * p(1/w) for the given degree bound.
    Poly reversed(int deg) const
    {
        std::vector<T> v(static_cast<std::size_t>(deg) + 1, ScalarTraits<T>::zero());
        for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(deg - k)] = c_[static_cast<std::size_t>(k)];
        return Poly(std::move(v));
    }

private:
    std::vector<T> c_;

    void trim()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
};

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T> std::pair<Poly<T>, Poly<T>> divmod(const Poly<T> &a, const Poly<T> &b)
{
    if (b.is_zero()) throw DivisionByZero("Poly divmod: zero divisor");
    std::vector<T> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {Poly<T>(), a};
    std::vector<T> quot(static_cast<std::size_t>(da - db + 1), ScalarTraits<T>::zero());
    const T inv_lead = ScalarTraits<T>::one() / b.leading();
    for (int k = da - db; k >= 0; --k) {
        const T factor = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (detail::coeff_is_zero(factor)) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

/// Monic gcd (zero if both inputs are zero).
template <class T> Poly<T> gcd(Poly<T> a, Poly<T> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Exact quotient; throws if b does not divide a.
template <class T> Poly<T> exact_div(const Poly<T> &a, const Poly<T> &b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ContractViolation("Poly exact_div: remainder is nonzero");
    return q;
}

template <class T> Poly<T> pow(const Poly<T> &p, int k)
{
    Poly<T> r = Poly<T>::constant(ScalarTraits<T>::one());
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

using ExactPoly = Poly<FieldElement>;

/// Square-free decomposition (Yun): p = unit * prod f_i^{m_i}, f_i monic,
/// pairwise coprime and square-free.
std::vector<std::pair<ExactPoly, int>> squarefree_factor(const ExactPoly &p);

std::string to_string(const ExactPoly &p, const std::string &var = "w");
std::ostream &operator<<(std::ostream &os, const ExactPoly &p);

} // namespace dyson

#endif
