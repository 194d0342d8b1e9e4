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

#include "dyson/algebra/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dyson {

namespace {

using Radicand = FieldElement::Radicand;

// Display and storage order: by magnitude, real before imaginary.
bool radicand_less(Radicand a, Radicand b)
{
    const auto ua = a < 0 ? -a : a;
    const auto ub = b < 0 ? -b : b;
    if (ua != ub) return ua < ub;
    return a > b;
}

struct RadicandLess {
    bool operator()(Radicand a, Radicand b) const { return radicand_less(a, b); }
};

Radicand to_radicand(const Integer &k)
{
    if (!k.fits_slong_p()) throw std::overflow_error("FieldElement: radicand exceeds 64 bits");
    return k.get_si();
}

std::vector<Radicand> prime_factors(Radicand m)
{
    std::vector<Radicand> out;
    Radicand n = m < 0 ? -m : m;
    for (Radicand p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// x = a + b*sqrt(g) with a and b free of the generator g.
std::pair<FieldElement, FieldElement> split(const FieldElement &x, Radicand g)
{
    FieldElement a;
    FieldElement b;
    for (const auto &[m, c] : x.terms()) {
        const bool has = g == -1 ? m < 0 : (m % g == 0);
        if (!has) {
            a += FieldElement::term(m, c);
        } else {
            const Radicand rest = g == -1 ? -m : m / g;
            b += FieldElement::term(rest, c);
        }
    }
    return {a, b};
}

Radicand pivot_generator(const FieldElement &x)
{
    const auto gens = x.generators();
    Radicand best = 0;
    for (Radicand g : gens) {
        if (g > best) best = g;
    }
    if (best == 0 && !gens.empty()) best = -1;
    return best;
}

std::optional<FieldElement> sqrt_impl(const FieldElement &x, int depth)
{
    if (x.is_zero()) return FieldElement();
    if (depth > 8) return std::nullopt;
    if (auto q = x.as_rational()) {
        try {
            return FieldElement::sqrt_of(*q);
        } catch (const std::overflow_error &) {
            return std::nullopt;
        }
    }
    const Radicand g = pivot_generator(x);
    auto [a, b] = split(x, g);
    const FieldElement gamma(g);
    auto norm_root = sqrt_impl(a * a - gamma * b * b, depth + 1);
    if (!norm_root) return std::nullopt;
    const FieldElement half(make_rational(1, 2));
    for (int sign : {1, -1}) {
        FieldElement t = (a + FieldElement(sign) * *norm_root) * half;
        if (t.is_zero()) continue;
        auto u = sqrt_impl(t, depth + 1);
        if (!u) continue;
        FieldElement v = b / (FieldElement(2) * *u);
        FieldElement cand = *u + v * FieldElement::sqrt_of(static_cast<long>(g));
        if (cand * cand == x) return cand;
    }
    return std::nullopt;
}

} // namespace

std::pair<std::int64_t, Radicand> multiply_radicands(Radicand m, Radicand n)
{
    const std::int64_t a = m < 0 ? -m : m;
    const std::int64_t b = n < 0 ? -n : n;
    const std::int64_t g = std::gcd(a, b);
    const __int128 k = static_cast<__int128>(a / g) * static_cast<__int128>(b / g);
    if (k > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("FieldElement: radicand product overflow");
    const int negatives = (m < 0 ? 1 : 0) + (n < 0 ? 1 : 0);
    const auto kk = static_cast<std::int64_t>(k);
    switch (negatives) {
    case 0:
        return {g, kk};
    case 1:
        return {g, -kk};
    default:
        return {-g, kk};
    }
}

FieldElement::FieldElement(const Rational &q)
{
    if (q != 0) terms_.emplace_back(1, q);
}

FieldElement FieldElement::term(Radicand m, const Rational &c)
{
    FieldElement x;
    if (m == 0) throw ContractViolation("FieldElement::term: zero radicand");
    if (c != 0) x.terms_.emplace_back(m, c);
    return x;
}

FieldElement FieldElement::sqrt_of(long m) { return sqrt_of(Rational(m)); }

FieldElement FieldElement::sqrt_of(const Rational &q)
{
    if (q == 0) return {};
    const Integer prod = q.get_num() * q.get_den();
    auto split = squarefree_split(prod);
    if (!split) throw std::overflow_error("FieldElement::sqrt_of: cannot classify radicand");
    Rational coef(split->first, q.get_den());
    coef.canonicalize();
    return term(to_radicand(split->second), coef);
}

std::optional<Rational> FieldElement::as_rational() const
{
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].first == 1) return terms_[0].second;
    return std::nullopt;
}

bool FieldElement::is_integer() const
{
    auto q = as_rational();
    return q && dyson::is_integer(*q);
}

Rational FieldElement::coefficient(Radicand m) const
{
    for (const auto &[r, c] : terms_) {
        if (r == m) return c;
    }
    return 0;
}

const std::array<Radicand, 8> &FieldElement::tower_basis()
{
    static const std::array<Radicand, 8> basis{1, 3, 26, 78, -1, -3, -26, -78};
    return basis;
}

bool FieldElement::in_tower() const
{
    const auto &basis = tower_basis();
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term &t) {
        return std::find(basis.begin(), basis.end(), t.first) != basis.end();
    });
}

std::array<Rational, 8> FieldElement::tower_coords() const
{
    if (!in_tower()) throw ContractViolation("FieldElement: element " + str() + " is outside Q(sqrt3, sqrt26, i)");
    std::array<Rational, 8> out;
    const auto &basis = tower_basis();
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] = coefficient(basis[k]);
    return out;
}

FieldElement FieldElement::from_tower_coords(const std::array<Rational, 8> &c)
{
    FieldElement x;
    const auto &basis = tower_basis();
    for (std::size_t k = 0; k < basis.size(); ++k) x += term(basis[k], c[k]);
    return x;
}

FieldElement FieldElement::conj() const
{
    FieldElement r(*this);
    for (auto &[m, c] : r.terms_) {
        if (m < 0) c = -c;
    }
    return r;
}

std::vector<Radicand> FieldElement::generators() const
{
    std::set<Radicand> gens;
    for (const auto &[m, c] : terms_) {
        if (m < 0) gens.insert(-1);
        for (Radicand p : prime_factors(m)) gens.insert(p);
    }
    return {gens.begin(), gens.end()};
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) throw DivisionByZero("FieldElement::inverse: zero element");
    if (auto q = as_rational()) return FieldElement(Rational(1) / *q);
    const Radicand g = pivot_generator(*this);
    auto [a, b] = split(*this, g);
    const FieldElement root = sqrt_of(static_cast<long>(g));
    const FieldElement conjugate = a - b * root;
    const FieldElement norm = a * a - FieldElement(g) * b * b;
    return conjugate * norm.inverse();
}

std::optional<FieldElement> FieldElement::sqrt() const { return sqrt_impl(*this, 0); }

FieldElement &FieldElement::operator+=(const FieldElement &o)
{
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && radicand_less(i->first, j->first))) {
            merged.push_back(*i++);
        } else if (i == terms_.end() || radicand_less(j->first, i->first)) {
            merged.push_back(*j++);
        } else {
            Rational s = i->second + j->second;
            if (s != 0) merged.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &o) { return *this += -o; }

FieldElement FieldElement::operator-() const
{
    FieldElement r(*this);
    for (auto &t : r.terms_) t.second = -t.second;
    return r;
}

FieldElement operator*(const FieldElement &a, const FieldElement &b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 && a.terms_[0].first == 1) {
        FieldElement r(b);
        for (auto &t : r.terms_) t.second *= a.terms_[0].second;
        return r;
    }
    if (b.terms_.size() == 1 && b.terms_[0].first == 1) return b * a;
    std::map<Radicand, Rational, RadicandLess> acc;
    for (const auto &[m, c] : a.terms_) {
        for (const auto &[n, d] : b.terms_) {
            const auto [factor, k] = multiply_radicands(m, n);
            acc[k] += c * d * factor;
        }
    }
    FieldElement r;
    for (auto &[k, c] : acc) {
        if (c != 0) r.terms_.emplace_back(k, std::move(c));
    }
    return r;
}

FieldElement &FieldElement::operator*=(const FieldElement &o)
{
    *this = *this * o;
    return *this;
}

std::complex<double> FieldElement::to_complex() const
{
    std::complex<double> z = 0;
    for (const auto &[m, c] : terms_) {
        const double mag = c.get_d() * std::sqrt(static_cast<double>(m < 0 ? -m : m));
        z += m < 0 ? std::complex<double>(0, mag) : std::complex<double>(mag, 0);
    }
    return z;
}

mp::Complex FieldElement::to_complex(mpfr_prec_t bits) const
{
    mp::Complex z(bits);
    for (const auto &[m, c] : terms_) {
        mp::Float mag = mp::Float(c, bits) * mp::sqrt(mp::Float(static_cast<long>(m < 0 ? -m : m), bits));
        if (m < 0) {
            z.im += mag;
        } else {
            z.re += mag;
        }
    }
    return z;
}

std::string FieldElement::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string unit;
        if (m == -1) {
            unit = "i";
        } else if (m < 0) {
            unit = "i*sqrt(" + std::to_string(-m) + ")";
        } else if (m > 1) {
            unit = "sqrt(" + std::to_string(m) + ")";
        }
        if (unit.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << unit;
        } else {
            os << mag.get_str() << "*" << unit;
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const FieldElement &x) { return os << x.str(); }

} // namespace dyson
