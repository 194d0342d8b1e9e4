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

#include "dyson/dynamics/weierstrass.hpp"

#include <cmath>
#include <vector>

namespace dyson {

namespace {

using mp::Complex;
using mp::Float;

constexpr int laurent_terms = 6; // c_2..c_6, i.e. through t^10
constexpr long halving_exponent = 12;

Complex real(const Rational &r, mpfr_prec_t bits) { return Complex(Float(r, bits), Float(0L, bits)); }

Complex promote(const Complex &z, mpfr_prec_t bits)
{
    Complex out(bits);
    mpfr_set(out.re.get(), z.re.get(), MPFR_RNDN);
    mpfr_set(out.im.get(), z.im.get(), MPFR_RNDN);
    return out;
}

} // namespace

Rational EllipticInvariants::discriminant() const { return g2 * g2 * g2 - 27 * g3 * g3; }

std::vector<Rational> wp_laurent_coefficients(const EllipticInvariants &inv, int n)
{
    if (n < 2) throw ContractViolation("wp_laurent_coefficients: need n >= 2");
    std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
    c[2] = inv.g2 / 20;
    if (n >= 3) c[3] = inv.g3 / 28;
    for (int k = 4; k <= n; ++k) {
        Rational s(0);
        for (int m = 2; m <= k - 2; ++m) s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = Rational(3) * s / ((2 * k + 1) * (k - 3));
    }
    return c;
}

WpValue wp_duplicate(const WpValue &v, const EllipticInvariants &inv)
{
    const mpfr_prec_t bits = v.p.bits();
    if (v.dp.is_zero()) throw LatticePointProximity("weierstrass_p: doubling a half-period lands on a lattice point");
    const Complex g2 = real(inv.g2, bits);
    const Complex two(2.0, 0.0, bits), six(6.0, 0.0, bits), quarter(0.25, 0.0, bits);
    const Complex ddp = six * v.p * v.p - g2 * Complex(0.5, 0.0, bits);
    const Complex lam = ddp / v.dp;
    WpValue out;
    out.p = quarter * lam * lam - two * v.p;
    out.dp = -(v.dp + lam * (out.p - v.p));
    return out;
}

Float wp_ode_residual(const WpValue &v, const EllipticInvariants &inv)
{
    const mpfr_prec_t bits = v.p.bits();
    const Complex rhs = Complex(4.0, 0.0, bits) * v.p * v.p * v.p - real(inv.g2, bits) * v.p - real(inv.g3, bits);
    return abs(v.dp * v.dp - rhs);
}

WpValue weierstrass_p(const Complex &t_in, const EllipticInvariants &inv, mpfr_prec_t bits)
{
    if (t_in.is_zero()) throw LatticePointProximity("weierstrass_p: t = 0 is a lattice point");
    const double mag = abs(t_in).to_double();
    int doublings = 0;
    while (std::ldexp(mag, -doublings) > std::ldexp(1.0, -static_cast<int>(halving_exponent))) ++doublings;
    const mpfr_prec_t work = bits + 64 + 4 * doublings;

    Complex z = promote(t_in, work);
    for (int i = 0; i < doublings; ++i) {
        z.re = ldexp(z.re, -1);
        z.im = ldexp(z.im, -1);
    }
    const auto c = wp_laurent_coefficients(inv, laurent_terms);
    const Complex z2 = z * z;
    const Complex one(1.0, 0.0, work);
    // wp = z^-2 + sum c_k z^(2k-2), wp' = -2 z^-3 + sum (2k-2) c_k z^(2k-3)
    Complex p = one / z2, dp = Complex(-2.0, 0.0, work) / (z2 * z);
    Complex pw = z2; // z^(2k-2) for k = 2
    for (int k = 2; k <= laurent_terms; ++k) {
        const Complex ck = real(c[static_cast<std::size_t>(k)], work);
        p += ck * pw;
        dp += ck * Complex(static_cast<double>(2 * k - 2), 0.0, work) * pw / z;
        pw *= z2;
    }
    WpValue v{p, dp};
    for (int i = 0; i < doublings; ++i) v = wp_duplicate(v, inv);

    // Near a lattice point wp blows up like (t - lattice)^-2.
    const double scale = std::max(1.0, 1.0 / (mag * mag));
    const double pm = abs(v.p).to_double();
    if (!std::isfinite(pm) || pm > 1e24 * scale) throw LatticePointProximity("weierstrass_p: argument too close to a lattice point");
    return {promote(v.p, bits), promote(v.dp, bits)};
}

} // namespace dyson
