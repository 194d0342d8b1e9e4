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

#include "dyson/algebra/mpfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyson::mp {

namespace {

mpfr_prec_t wider(const Float &a, const Float &b) { return std::max(a.bits(), b.bits()); }

// Result of a unary MPFR function, computed at the argument's precision.
template <class Fn> Float unary(const Float &x, Fn fn)
{
    Float r(x.bits());
    fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}

} // namespace

Float::Float(mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Float::Float(double v, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Float::Float(long v, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Float::Float(const mpq_class &q, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Float::Float(const std::string &decimal, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("mp::Float: cannot parse '" + decimal + "'");
    }
}

Float::Float(const Float &other)
{
    mpfr_init2(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Float::Float(Float &&other) noexcept
{
    mpfr_init2(v_, other.bits());
    mpfr_swap(v_, other.v_);
}

Float &Float::operator=(const Float &other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Float &Float::operator=(Float &&other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Float::~Float() { mpfr_clear(v_); }

std::string Float::str(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return buf.data();
}

Float &Float::operator+=(const Float &o)
{
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Float &Float::operator-=(const Float &o)
{
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Float &Float::operator*=(const Float &o)
{
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Float &Float::operator/=(const Float &o)
{
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Float Float::operator-() const
{
    Float r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Float Float::pi(mpfr_prec_t bits)
{
    Float r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Float operator+(Float a, const Float &b) { return a += b; }
Float operator-(Float a, const Float &b) { return a -= b; }
Float operator*(Float a, const Float &b) { return a *= b; }
Float operator/(Float a, const Float &b) { return a /= b; }
bool operator<(const Float &a, const Float &b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Float &a, const Float &b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Float &a, const Float &b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Float &a, const Float &b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Float &a, const Float &b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Float abs(const Float &x) { return unary(x, mpfr_abs); }
Float sqrt(const Float &x) { return unary(x, mpfr_sqrt); }
Float cbrt(const Float &x) { return unary(x, mpfr_cbrt); }
Float exp(const Float &x) { return unary(x, mpfr_exp); }
Float log(const Float &x) { return unary(x, mpfr_log); }
Float sin(const Float &x) { return unary(x, mpfr_sin); }
Float cos(const Float &x) { return unary(x, mpfr_cos); }
Float sinh(const Float &x) { return unary(x, mpfr_sinh); }
Float cosh(const Float &x) { return unary(x, mpfr_cosh); }
Float acos(const Float &x) { return unary(x, mpfr_acos); }

Float atan2(const Float &y, const Float &x)
{
    Float r(wider(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Float hypot(const Float &x, const Float &y)
{
    Float r(wider(x, y));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

Float ldexp(const Float &x, long e)
{
    Float r(x);
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

Complex &Complex::operator+=(const Complex &o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex &Complex::operator-=(const Complex &o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex &Complex::operator*=(const Complex &o)
{
    Float r = re * o.re - im * o.im;
    Float i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex &Complex::operator/=(const Complex &o)
{
    // Smith's algorithm keeps intermediate magnitudes bounded.
    if (abs(o.re) >= abs(o.im)) {
        Float t = o.im / o.re;
        Float den = o.re + o.im * t;
        Float r = (re + im * t) / den;
        Float i = (im - re * t) / den;
        re = std::move(r);
        im = std::move(i);
    } else {
        Float t = o.re / o.im;
        Float den = o.re * t + o.im;
        Float r = (re * t + im) / den;
        Float i = (im * t - re) / den;
        re = std::move(r);
        im = std::move(i);
    }
    return *this;
}

Complex operator+(Complex a, const Complex &b) { return a += b; }
Complex operator-(Complex a, const Complex &b) { return a -= b; }
Complex operator*(Complex a, const Complex &b) { return a *= b; }
Complex operator/(Complex a, const Complex &b) { return a /= b; }

Complex operator*(Complex a, const Float &s)
{
    a.re *= s;
    a.im *= s;
    return a;
}

bool operator==(const Complex &a, const Complex &b) { return a.re == b.re && a.im == b.im; }

Float abs(const Complex &z) { return hypot(z.re, z.im); }

Complex sqrt(const Complex &z)
{
    const mpfr_prec_t bits = z.bits();
    if (z.is_zero()) return Complex(bits);
    Float m = abs(z);
    Float half(0.5, bits);
    Float a = sqrt((m + abs(z.re)) * half);
    if (z.re.sign() >= 0) {
        return {a, z.im / (a + a)};
    }
    Float b = abs(z.im) / (a + a);
    if (z.im.sign() < 0) return {b, -a};
    return {b, a};
}

Complex exp(const Complex &z)
{
    Float m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Complex sinh(const Complex &z) { return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)}; }

Complex cosh(const Complex &z) { return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)}; }

Complex conj(const Complex &z) { return {z.re, -z.im}; }

} // namespace dyson::mp
