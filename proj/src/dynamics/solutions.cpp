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

#include "dyson/dynamics/solutions.hpp"

#include <algorithm>

#include "dyson/model/dyson.hpp"

namespace dyson {

namespace {

using mp::Complex;
using mp::Float;

Complex eval(const ExactPoly &p, const Complex &x)
{
    const mpfr_prec_t bits = x.bits();
    Complex acc(0.0, 0.0, bits);
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_complex(bits);
    return acc;
}

Complex cst(double v, mpfr_prec_t bits) { return Complex(v, 0.0, bits); }

} // namespace

std::vector<double> TimeGrid::points() const
{
    if (count < 1 || !(t_max >= t_min)) throw ContractViolation("TimeGrid: bad range");
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(count == 1 ? t_min : t_min + (t_max - t_min) * i / (count - 1));
    return out;
}

EllipticInvariants phi_invariants(const Rational &h)
{
    EllipticInvariants inv{Rational(4, 3), Rational(-4) * (h - 2) / 27};
    inv.g2.canonicalize();
    inv.g3.canonicalize();
    return inv;
}

RationalFunction compose(const ExactPoly &p, const RationalFunction &R)
{
    RationalFunction acc;
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * R + RationalFunction(*it);
    return acc;
}

PhiCheck verify_phi(const Rational &h, const TimeGrid &grid, mpfr_prec_t bits)
{
    return verify_phi(diagonal_reduce(taylor_truncate(3)), h, grid, bits);
}

PhiCheck verify_phi(const DiagonalSystem &K, const Rational &h, const TimeGrid &grid, mpfr_prec_t bits)
{
    PhiCheck out;
    out.h = h;
    out.invariants = phi_invariants(h);
    const Complex s3 = FieldElement::sqrt_of(3L).to_complex(bits);
    const Complex hh(Float(h, bits), Float(0L, bits));
    const Complex a = -(s3 * cst(0.5, bits)), b = -(s3 * cst(1.5, bits));
    const EllipticInvariants &inv = out.invariants;
    for (double t : grid.points()) {
        const WpValue v = weierstrass_p(cst(t, bits), inv, bits);
        const Complex ddp = cst(6, bits) * v.p * v.p - Complex(Float(inv.g2, bits), Float(0L, bits)) * cst(0.5, bits);
        const Complex phi = a + b * v.p;
        const Complex dphi = b * v.dp;
        const Complex ddphi = b * ddp;
        out.energy_residual = std::max(out.energy_residual, abs(dphi * dphi - (hh - eval(K.potential, phi))).to_double());
        out.accel_residual = std::max(out.accel_residual, abs(ddphi - eval(K.force, phi)).to_double());
        out.wp_residual = std::max(out.wp_residual, wp_ode_residual(v, inv).to_double());
        ++out.points;
    }
    return out;
}

PsiCheck verify_psi(const TimeGrid &grid, mpfr_prec_t bits)
{
    const DiagonalSystem L = diagonal_reduce(taylor_truncate(4));
    PsiCheck out;

    // Exact part: psi = R(w) with R = -3 sqrt3 / w.
    const FieldElement s3 = FieldElement::sqrt_of(3L);
    const ExactPoly W = ExactPoly::x();
    const ExactPoly wm1 = W - ExactPoly::constant(FieldElement(1));
    const ExactPoly wdot2 = ExactPoly::constant(FieldElement(-104)) - ExactPoly::constant(FieldElement(4)) * wm1 * wm1;
    const ExactPoly wddot = ExactPoly::constant(FieldElement(-4)) * wm1;
    const RationalFunction R(ExactPoly::constant(FieldElement(-3) * s3), W);
    const RationalFunction R1 = R.derivative(), R2 = R1.derivative();
    out.acceleration = R2 * RationalFunction(wdot2) + R1 * RationalFunction(wddot);
    out.force = compose(L.force, R);
    out.identity_exact = out.acceleration == out.force;
    const RationalFunction energy = R1 * R1 * RationalFunction(wdot2) + compose(L.potential, R);
    out.energy_constant = energy.is_polynomial() && energy.num().degree() <= 0;
    out.energy = energy.is_zero() ? FieldElement(0) : energy.num().coeff(0) / energy.den().coeff(0);

    // Numeric part on the grid.
    const Complex c3 = s3.to_complex(bits);
    const Complex r26 = FieldElement::sqrt_of(26L).to_complex(bits);
    const Complex hh = out.energy.to_complex(bits);
    for (double t : grid.points()) {
        const Complex it2(0.0, 2 * t, bits);
        const Complex sh = sinh(it2), ch = cosh(it2);
        const Complex w = r26 * sh + cst(1, bits);
        if (abs(w).to_double() < 1e-8) throw PoleProximity("verify_psi: grid point too close to a pole of psi");
        const Complex wd = Complex(0.0, 2.0, bits) * r26 * ch;
        const Complex wdd = cst(-4, bits) * r26 * sh;
        const Complex psi = -(cst(3, bits) * c3) / w;
        const Complex dpsi = cst(3, bits) * c3 * wd / (w * w);
        const Complex ddpsi = cst(3, bits) * c3 * (wdd * w - cst(2, bits) * wd * wd) / (w * w * w);
        out.ode_residual = std::max(out.ode_residual, abs(ddpsi - eval(L.force, psi)).to_double());
        out.energy_residual = std::max(out.energy_residual, abs(dpsi * dpsi + eval(L.potential, psi) - hh).to_double());
        const Complex wm = w - cst(1, bits);
        out.w_relation_residual =
            std::max(out.w_relation_residual, abs(wd * wd + cst(104, bits) + cst(4, bits) * wm * wm).to_double());
        ++out.points;
    }
    return out;
}

} // namespace dyson
