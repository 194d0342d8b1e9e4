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

#include "dyson/algebra/roots.hpp"

#include <algorithm>
#include <cmath>

namespace dyson {

namespace {

constexpr mpfr_prec_t guard_bits = 32;

struct Eval {
    mp::Complex value;
    mp::Complex slope;
    mp::Float scale; // sum |a_k| |z|^k
};

Eval horner(const ComplexPoly &p, const mp::Complex &z, mpfr_prec_t bits)
{
    mp::Complex v(bits), d(bits);
    mp::Float s(0L, bits);
    const mp::Float az = abs(z);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        d = d * z + v;
        v = v * z + *it;
        s = s * az + abs(*it);
    }
    return {v, d, s};
}

mp::Float with_bits(const mp::Float &x, mpfr_prec_t bits)
{
    mp::Float r(bits);
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
}

mp::Complex with_bits(const mp::Complex &z, mpfr_prec_t bits) { return {with_bits(z.re, bits), with_bits(z.im, bits)}; }

} // namespace

ComplexPoly to_complex_poly(const ExactPoly &p, mpfr_prec_t bits)
{
    std::vector<mp::Complex> c;
    c.reserve(p.coeffs().size());
    for (const auto &x : p.coeffs()) c.push_back(x.to_complex(bits));
    return ComplexPoly(std::move(c));
}

std::vector<NumericRoot> aberth_roots(const ComplexPoly &p_in, mpfr_prec_t bits)
{
    if (p_in.degree() < 1) throw ContractViolation("aberth_roots: degree must be at least 1");
    const mpfr_prec_t wbits = bits + guard_bits;
    std::vector<mp::Complex> wc;
    for (const auto &c : p_in.coeffs()) wc.push_back(with_bits(c, wbits));
    const ComplexPoly p(std::move(wc));
    const int n = p.degree();

    std::vector<mp::Complex> z;
    if (n == 1) {
        z.push_back(-(p.coeff(0) / p.coeff(1)));
    } else {
        // Start on a circle with the geometric-mean root modulus.
        const double a0 = abs(p.coeff(0)).to_double();
        const double an = abs(p.leading()).to_double();
        double rho = (a0 > 0 && an > 0) ? std::pow(a0 / an, 1.0 / n) : 1.0;
        if (!std::isfinite(rho) || rho == 0) rho = 1.0;
        const double two_pi = 2.0 * std::acos(-1.0);
        for (int k = 0; k < n; ++k) {
            const double ang = two_pi * k / n + 0.4;
            z.emplace_back(std::complex<double>(rho * std::cos(ang), rho * std::sin(ang)), wbits);
        }
        const mp::Float tol = mp::ldexp(mp::Float(1L, wbits), -static_cast<long>(bits) - 8);
        bool converged = false;
        for (int iter = 0; iter < 2000 && !converged; ++iter) {
            converged = true;
            for (int k = 0; k < n; ++k) {
                const Eval e = horner(p, z[static_cast<std::size_t>(k)], wbits);
                if (e.value.is_zero()) continue;
                const mp::Complex ratio = e.value / e.slope;
                mp::Complex s(wbits);
                for (int j = 0; j < n; ++j) {
                    if (j == k) continue;
                    s += mp::Complex(1.0, 0.0, wbits) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
                }
                const mp::Complex corr = ratio / (mp::Complex(1.0, 0.0, wbits) - ratio * s);
                z[static_cast<std::size_t>(k)] -= corr;
                mp::Float size = abs(z[static_cast<std::size_t>(k)]);
                if (size < mp::Float(1L, wbits)) size = mp::Float(1L, wbits);
                if (abs(corr) > tol * size) converged = false;
            }
        }
    }
    // Newton polish and residual bookkeeping.
    std::vector<NumericRoot> out;
    const double bound = std::ldexp(1.0, -static_cast<int>(bits / 2));
    double worst = 0.0;
    for (auto &r : z) {
        for (int it = 0; it < 3 && n > 1; ++it) {
            const Eval e = horner(p, r, wbits);
            if (e.value.is_zero() || e.slope.is_zero()) break;
            r -= e.value / e.slope;
        }
        const Eval e = horner(p, r, wbits);
        const double rel = e.scale.is_zero() ? 0.0 : (abs(e.value) / e.scale).to_double();
        worst = std::max(worst, rel);
        out.push_back({with_bits(r, bits), 1, rel});
    }
    if (worst > bound) throw RootNotConverged("aberth_roots: residual above bound", worst);
    return out;
}

std::vector<NumericRoot> poly_complex_roots(const ExactPoly &p, mpfr_prec_t bits)
{
    if (p.degree() < 1) throw ContractViolation("poly_complex_roots: degree must be at least 1");
    std::vector<NumericRoot> out;
    for (const auto &[f, m] : squarefree_factor(p)) {
        if (f.degree() < 1) continue;
        for (auto &r : aberth_roots(to_complex_poly(f, bits + guard_bits), bits)) {
            r.multiplicity = m;
            out.push_back(std::move(r));
        }
    }
    return out;
}

namespace {

bool has_rational_coeffs(const ExactPoly &p)
{
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const FieldElement &c) { return c.is_rational(); });
}

// Rational roots of a square-free factor with rational coefficients. Any
// root a/b has b dividing the leading coefficient of the integer-scaled
// polynomial, so rounding root*lead to an integer and testing exactly finds
// all of them.
std::vector<Rational> rational_roots(const ExactPoly &f)
{
    Integer den_lcm = 1;
    for (const auto &c : f.coeffs()) {
        const Rational q = *c.as_rational();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    const Rational lead = *f.leading().as_rational() * Rational(den_lcm);
    std::vector<Rational> out;
    for (const auto &r : aberth_roots(to_complex_poly(f, 160), 128)) {
        const double im = r.value.im.to_double();
        const double re = r.value.re.to_double();
        if (std::abs(im) > 1e-20 * std::max(1.0, std::abs(re))) continue;
        mp::Float scaled = r.value.re * mp::Float(lead, 160);
        mpfr_round(scaled.get(), scaled.get());
        mpz_class k;
        mpfr_get_z(k.get_mpz_t(), scaled.get(), MPFR_RNDN);
        const Rational cand = Rational(k) / lead;
        if (f(FieldElement(cand)).is_zero() && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
    return out;
}

} // namespace

ExactRootResult exact_roots(const ExactPoly &p)
{
    if (p.degree() < 1) throw ContractViolation("exact_roots: degree must be at least 1");
    ExactRootResult res;
    res.complete = true;
    for (const auto &[f0, m] : squarefree_factor(p)) {
        ExactPoly f = f0;
        if (f.degree() > 2 && has_rational_coeffs(f)) {
            for (const Rational &q : rational_roots(f)) {
                res.roots.push_back({FieldElement(q), m});
                f = exact_div(f, ExactPoly{FieldElement(-q), FieldElement(1)});
            }
        }
        if (f.degree() == 1) {
            res.roots.push_back({-f.coeff(0) / f.coeff(1), m});
        } else if (f.degree() == 2) {
            const FieldElement a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
            const auto s = (b * b - FieldElement(4) * a * c).sqrt();
            if (!s) {
                res.complete = false;
                continue;
            }
            const FieldElement two_a = FieldElement(2) * a;
            res.roots.push_back({(-b + *s) / two_a, m});
            res.roots.push_back({(-b - *s) / two_a, m});
        } else if (f.degree() > 2) {
            res.complete = false;
        }
    }
    return res;
}

} // namespace dyson
