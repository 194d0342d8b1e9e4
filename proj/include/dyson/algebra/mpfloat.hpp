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

#ifndef DYSON_ALGEBRA_MPFLOAT_HPP
#define DYSON_ALGEBRA_MPFLOAT_HPP

#include <complex>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace dyson::mp {

// Arbitrary-precision real backed by MPFR. Each value carries its own
// precision; binary operations produce the larger of the operand precisions.
class Float {
public:
    static constexpr mpfr_prec_t default_bits = 128;

    explicit Float(mpfr_prec_t bits = default_bits);
    Float(double v, mpfr_prec_t bits);
    Float(long v, mpfr_prec_t bits);
    Float(const mpq_class &q, mpfr_prec_t bits);
    Float(const std::string &decimal, mpfr_prec_t bits);
    Float(const Float &other);
    Float(Float &&other) noexcept;
    Float &operator=(const Float &other);
    Float &operator=(Float &&other) noexcept;
    ~Float();

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    Float &operator+=(const Float &o);
    Float &operator-=(const Float &o);
    Float &operator*=(const Float &o);
    Float &operator/=(const Float &o);
    Float operator-() const;

    static Float pi(mpfr_prec_t bits);

private:
    mpfr_t v_;
};

Float operator+(Float a, const Float &b);
Float operator-(Float a, const Float &b);
Float operator*(Float a, const Float &b);
Float operator/(Float a, const Float &b);
bool operator<(const Float &a, const Float &b);
bool operator>(const Float &a, const Float &b);
bool operator<=(const Float &a, const Float &b);
bool operator>=(const Float &a, const Float &b);
bool operator==(const Float &a, const Float &b);

Float abs(const Float &x);
Float sqrt(const Float &x);
Float cbrt(const Float &x);
Float exp(const Float &x);
Float log(const Float &x);
Float sin(const Float &x);
Float cos(const Float &x);
Float sinh(const Float &x);
Float cosh(const Float &x);
Float acos(const Float &x);
Float atan2(const Float &y, const Float &x);
Float hypot(const Float &x, const Float &y);
Float ldexp(const Float &x, long e);

// Complex number over Float. Only the operations the library needs.
struct Complex {
    Float re;
    Float im;

    explicit Complex(mpfr_prec_t bits = Float::default_bits) : re(bits), im(bits) {}
    Complex(Float r, Float i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r, double i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}
    Complex(std::complex<double> z, mpfr_prec_t bits) : re(z.real(), bits), im(z.imag(), bits) {}

    mpfr_prec_t bits() const { return re.bits() > im.bits() ? re.bits() : im.bits(); }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex &operator+=(const Complex &o);
    Complex &operator-=(const Complex &o);
    Complex &operator*=(const Complex &o);
    Complex &operator/=(const Complex &o);
    Complex operator-() const { return {-re, -im}; }
};

Complex operator+(Complex a, const Complex &b);
Complex operator-(Complex a, const Complex &b);
Complex operator*(Complex a, const Complex &b);
Complex operator/(Complex a, const Complex &b);
Complex operator*(Complex a, const Float &s);
bool operator==(const Complex &a, const Complex &b);

Float abs(const Complex &z);
Complex sqrt(const Complex &z);
Complex exp(const Complex &z);
Complex sinh(const Complex &z);
Complex cosh(const Complex &z);
Complex conj(const Complex &z);

inline bool is_zero(const Complex &z) { return z.is_zero(); }

} // namespace dyson::mp

#endif
