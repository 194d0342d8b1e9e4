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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "dyson/dynamics/monodromy.hpp"
#include "dyson/dynamics/period.hpp"
#include "dyson/dynamics/solutions.hpp"

using namespace dyson;

namespace {

constexpr double third_pi = M_PI / 3;
const double cstar = 3 * std::sqrt(3.0) / 16;
const double emin = -3 * std::log(std::sqrt(3.0) / 2);

// mpmath at 40 digits: quartic roots, bisection turning points, tanh-sinh
// periods, and wp from Jacobi sn.
constexpr double quartic_r1 = 0.5287381388587941389310551, quartic_r2 = -0.9793680481089150836680218;
constexpr double e1_qminus = 0.6633135428845778226886324, e1_qplus = 1.37459328119852655940383;
constexpr double T_01 = 3.093789800998059551654853, T_1 = 2.68939948842391256801696, T_5 = 1.631676591779875793202017;
constexpr double real_period_h2 = 3.45082180766962799124046489096;

mp::Float fl(const char *s) { return mp::Float(std::string(s), 160); }

} // namespace

TEST_CASE("reduced potential")
{
    CHECK(potential_tilde(third_pi) == doctest::Approx(emin).epsilon(1e-15));
    CHECK(potential_tilde(M_PI / 4) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    double best = 0, vbest = 1e300;
    for (int i = 1; i < 10000; ++i) {
        const double q = M_PI / 2 * i / 10000;
        if (potential_tilde(q) < vbest) {
            vbest = potential_tilde(q);
            best = q;
        }
    }
    CHECK(std::abs(best - third_pi) <= M_PI / 2 / 10000);
    CHECK_THROWS_AS(potential_tilde(0.0), ContractViolation);
    CHECK_THROWS_AS(potential_tilde(M_PI / 2), ContractViolation);
    const mp::Float q(third_pi, 128);
    CHECK(std::abs((potential_tilde(q) - energy_min(128)).to_double()) < 1e-15);
}

TEST_CASE("closed-form turning points")
{
    const auto eq = turning_points_closed(cstar);
    CHECK(eq.at_equilibrium);
    CHECK(eq.r1 == -0.5);
    CHECK(eq.r2 == -0.5);
    CHECK(eq.eps == 0);
    CHECK(eq.delta == 0);
    CHECK(eq.B == 3);
    // (1 + 1/2)^2 (1 - 1/4) = 27/16 = 16 c*^2
    CHECK(16 * cstar * cstar == doctest::Approx(27.0 / 16).epsilon(1e-15));
    const auto eqmp = turning_points_closed(c_star(256));
    CHECK(eqmp.at_equilibrium);

    const auto d = turning_points_closed(0.1);
    CHECK(d.r1 == doctest::Approx(quartic_r1).epsilon(1e-15));
    CHECK(d.r2 == doctest::Approx(quartic_r2).epsilon(1e-15));
    CHECK(d.quartic_residual < 1e-12);
    CHECK(d.energy_residual < 1e-10);
    CHECK(d.q_plus == doctest::Approx(third_pi + d.eps).epsilon(1e-15));
    CHECK(d.q_minus == doctest::Approx(third_pi - d.delta).epsilon(1e-15));
    CHECK(d.eps > 0);
    CHECK(d.delta > 0);
    CHECK(std::abs(potential_tilde(third_pi + d.eps) - potential_tilde(third_pi - d.delta)) < 1e-10);

    CHECK_THROWS_AS(turning_points_closed(0.0), ContractViolation);
    CHECK_THROWS_AS(turning_points_closed(-0.1), ContractViolation);
    CHECK_THROWS_AS(turning_points_closed(cstar * (1 + 1e-12)), ContractViolation);
}

TEST_CASE("closed form agrees with the numeric roots on 50 parameters")
{
    double worst = 0, worst_quartic = 0;
    for (int i = 1; i <= 50; ++i) {
        const double c = 0.02 + (cstar - 0.02) * i / 51.0;
        const auto d = turning_points_closed(c);
        const mp::Float E = energy_from_c(mp::Float(c, 128));
        const auto [qm, qp] = turning_points_numeric(E);
        worst = std::max({worst, std::abs(qm.to_double() - d.q_minus), std::abs(qp.to_double() - d.q_plus)});
        worst_quartic = std::max(worst_quartic, d.quartic_residual);
        CHECK(d.energy_residual < 1e-12);
    }
    CHECK(worst < 1e-9);
    CHECK(worst_quartic < 1e-12);
}

TEST_CASE("numeric turning points")
{
    const mp::Float E1(1L, 128);
    const auto [a, b] = turning_points_numeric(E1);
    CHECK(a.to_double() == doctest::Approx(e1_qminus).epsilon(1e-15));
    CHECK(b.to_double() == doctest::Approx(e1_qplus).epsilon(1e-15));
    CHECK(std::abs((potential_tilde(a) - E1).to_double()) < 1e-12);
    CHECK(std::abs((potential_tilde(b) - E1).to_double()) < 1e-12);
    const auto d = turning_points_closed(std::exp(-1.0) / 2);
    CHECK(d.q_minus == doctest::Approx(e1_qminus).epsilon(1e-12));
    CHECK(d.q_plus == doctest::Approx(e1_qplus).epsilon(1e-12));

    // harmonic scale: q'^2 = dE - 4 x^2, amplitude sqrt(dE)/2
    const auto [sa, sb] = turning_points_numeric(energy_min(128) + mp::Float(1e-8, 128));
    CHECK(third_pi - sa.to_double() == doctest::Approx(5e-5).epsilon(1e-2));
    CHECK(sb.to_double() - third_pi == doctest::Approx(5e-5).epsilon(1e-2));

    const auto [wa, wb] = turning_points_numeric(20.0);
    CHECK(wa < 1e-2);
    CHECK(wb > M_PI / 2 - 1e-2);
    CHECK_THROWS_AS(turning_points_numeric(energy_min(128)), NoOrbit);
    CHECK_THROWS_AS(turning_points_numeric(0.0), NoOrbit);
}

TEST_CASE("period by quadrature")
{
    const mp::Float emp = energy_min(128);
    const auto small = period((emp + mp::Float(1e-6, 128)).to_double());
    CHECK(std::abs(small.T - M_PI) < 1e-3);
    CHECK(period((emp + fl("0.1")).to_double()).T == doctest::Approx(T_01).epsilon(1e-11));
    CHECK(period((emp + fl("1")).to_double()).T == doctest::Approx(T_1).epsilon(1e-11));
    const auto p5 = period((emp + fl("5")).to_double());
    CHECK(p5.T == doctest::Approx(T_5).epsilon(1e-11));
    CHECK(p5.error_estimate < 1e-10);
    CHECK(p5.phi == doctest::Approx(p5.T - p5.log_eta).epsilon(1e-15));
    CHECK(p5.log_eta == doctest::Approx(std::log(p5.eps * p5.delta)).epsilon(1e-12));

    // The log walls stiffen the well: the period falls as the energy grows.
    double prev = 1e9;
    for (double off = 0.05; off < 6; off += 0.25) {
        const double T = period(emin + off).T;
        CHECK(T < prev);
        prev = T;
    }
    CHECK_THROWS_AS(period(emin - 0.1), NoOrbit);
    CHECK_THROWS_AS(period(1.0, 0.0), ContractViolation);
}

TEST_CASE("quadrature matches the symplectic return map")
{
    // Fourth order: at E_min + 5 the 1e-3 step leaves 8e-6, 2.5e-4 leaves ~3e-8.
    double worst = 0;
    for (double off : {0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0}) {
        const double E = emin + off;
        const auto rm = return_map_period(E, 2.5e-4, 2);
        worst = std::max(worst, std::abs(rm.period - period(E).T));
        CHECK(rm.crossings == 2);
    }
    CHECK(worst < 1e-6);
    CHECK_THROWS_AS(return_map_period(emin), NoOrbit);
}

TEST_CASE("energy drift over a thousand periods")
{
    const auto rm = return_map_period(emin + 1.0, 1e-3, 1000);
    CHECK(rm.crossings == 1000);
    CHECK(rm.max_energy_drift < 1e-8);
}

TEST_CASE("branch monodromy around the equilibrium parameter")
{
    const auto one = eta_monodromy(1e-3, 2000, 1);
    CHECK(one.ok);
    CHECK(one.min_guard_ratio >= 3);
    CHECK(one.branch_changed);
    CHECK(one.roots_swapped);
    CHECK(std::abs(std::abs(one.log_eta_winding) - 1) < 1e-6);
    // B itself is single-valued here: the cubic has a simple root B = 3 at c*.
    CHECK(std::abs(one.B_after - one.B_before) < 1e-9);

    const auto two = eta_monodromy(1e-3, 2000, 2);
    CHECK(two.ok);
    CHECK_FALSE(two.branch_changed);
    CHECK_FALSE(two.roots_swapped);
    CHECK(std::abs(two.radical_after - two.radical_before) < 1e-9 * std::abs(two.radical_before));
    CHECK(std::abs(std::abs(two.log_eta_winding) - 2) < 1e-6);

    const auto away = eta_monodromy(cplx(cstar - 0.1, 0), 1e-3, 2000, 1);
    CHECK(away.ok);
    CHECK_FALSE(away.branch_changed);
    CHECK_FALSE(away.roots_swapped);
    CHECK(std::abs(away.log_eta_winding) < 1e-9);

    const auto coarse = eta_monodromy(1e-3, 4, 1);
    CHECK_FALSE(coarse.ok);
    CHECK_FALSE(coarse.error.empty());
    CHECK_THROWS_AS(eta_monodromy(0.0, 100, 1), ContractViolation);
}

TEST_CASE("Weierstrass p")
{
    const auto inv2 = phi_invariants(2);
    CHECK(inv2.g2 == Rational(4, 3));
    CHECK(inv2.g3 == 0);
    CHECK(phi_invariants(1).g3 == Rational(4, 27));
    CHECK(inv2.discriminant() == Rational(64, 27));

    const auto c = wp_laurent_coefficients(phi_invariants(1), 6);
    CHECK(c[2] == phi_invariants(1).g2 / 20);
    CHECK(c[3] == phi_invariants(1).g3 / 28);
    CHECK(c[4] == phi_invariants(1).g2 * phi_invariants(1).g2 / 1200);

    const char *frozen[3][2] = {{"4.01702089572877720500302103468", "1.07355434150293641295954656126"},
                                {"4.016689829662468626749788275", "1.0681634931330460012522398501"},
                                {"4.01635876780772875924555903089", "1.06277704529665055854685762528"}};
    for (int h = 1; h <= 3; ++h) {
        const auto inv = phi_invariants(h);
        const auto a = weierstrass_p(mp::Complex(0.5, 0.0, 128), inv);
        const auto b = weierstrass_p(mp::Complex(1.0, 0.0, 128), inv);
        CHECK(abs(a.p.re - fl(frozen[h - 1][0])).to_double() < 1e-25);
        CHECK(abs(b.p.re - fl(frozen[h - 1][1])).to_double() < 1e-25);
        CHECK(abs(a.p.im).to_double() < 1e-30);
    }

    double worst = 0;
    for (int h = 1; h <= 3; ++h) {
        const auto inv = phi_invariants(h);
        for (double re : {0.03, 0.2, 0.7, 1.1, 1.6}) {
            for (double im : {-0.9, 0.0, 0.4}) {
                const auto v = weierstrass_p(mp::Complex(re, im, 128), inv);
                worst = std::max(worst, wp_ode_residual(v, inv).to_double());
                const auto m = weierstrass_p(mp::Complex(-re, -im, 128), inv);
                CHECK(abs(m.p - v.p).to_double() < 1e-25 * std::max(1.0, abs(v.p).to_double()));
                CHECK(abs(m.dp + v.dp).to_double() < 1e-25 * std::max(1.0, abs(v.dp).to_double()));
            }
        }
    }
    CHECK(worst < 1e-20);

    // doubling once by hand against a direct evaluation at 2t
    const auto inv = phi_invariants(3);
    const auto half = weierstrass_p(mp::Complex(0.35, 0.1, 128), inv);
    const auto direct = weierstrass_p(mp::Complex(0.7, 0.2, 128), inv);
    const auto doubled = wp_duplicate(half, inv);
    CHECK(abs(doubled.p - direct.p).to_double() < 1e-15);
    CHECK(abs(doubled.dp - direct.dp).to_double() < 1e-15);

    // small t: t^-2 + (g2/20) t^2 + (g3/28) t^4 dominates
    const double t = 1e-3;
    const auto s = weierstrass_p(mp::Complex(t, 0.0, 128), phi_invariants(1));
    const double series = 1 / (t * t) + (4.0 / 3 / 20) * t * t + (4.0 / 27 / 28) * std::pow(t, 4);
    CHECK(s.p.re.to_double() == doctest::Approx(series).epsilon(1e-15));

    CHECK_THROWS_AS(weierstrass_p(mp::Complex(0.0, 0.0, 128), inv2), LatticePointProximity);
    CHECK_THROWS_AS(weierstrass_p(mp::Complex(real_period_h2, 0.0, 128), inv2), LatticePointProximity);
    CHECK_NOTHROW(weierstrass_p(mp::Complex(real_period_h2 / 2, 0.0, 128), inv2));
}

TEST_CASE("elliptic solution of the cubic truncation")
{
    for (int h : {1, 2, 3}) {
        const auto r = verify_phi(h);
        CHECK(r.points == 20);
        CHECK(r.energy_residual < 1e-10);
        CHECK(r.accel_residual < 1e-10);
        CHECK(r.wp_residual < 1e-20);
    }
    // any energy is admissible, not only integers
    CHECK(verify_phi(Rational(3, 2)).energy_residual < 1e-10);
}

TEST_CASE("hyperbolic solution of the quartic truncation")
{
    const auto r = verify_psi();
    CHECK(r.points == 20);
    CHECK(r.ode_residual < 1e-12);
    CHECK(r.w_relation_residual < 1e-25);
    CHECK(r.energy_residual < 1e-25);
    CHECK(r.identity_exact);
    CHECK(r.energy_constant);
    CHECK(r.energy.is_zero());
    // both sides reduce to 12 sqrt3 (w^2 - 3w + 54) / w^3
    const FieldElement s3 = FieldElement::sqrt_of(3L);
    const ExactPoly num = ExactPoly{FieldElement(54), FieldElement(-3), FieldElement(1)} * (FieldElement(12) * s3);
    const RationalFunction expected(num, ExactPoly::monomial(FieldElement(1), 3));
    CHECK(r.acceleration == expected);
    CHECK(r.force == expected);
    // psi at w = 1 (t = 0) is -3 sqrt3
    const RationalFunction psi(ExactPoly::constant(FieldElement(-3) * s3), ExactPoly::x());
    CHECK(psi(FieldElement(1)) == FieldElement(-3) * s3);

    const auto quarter = verify_psi(TimeGrid{M_PI / 4, M_PI / 4, 1});
    CHECK(quarter.points == 1);
    CHECK(quarter.ode_residual < 1e-12);
}

TEST_CASE("period scan table")
{
    const auto rows = period_scan(0.1, 2.0, 5);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].c < rows[i].c);
    CHECK(rows.back().status == "limit");
    CHECK(rows.back().T == M_PI);
    CHECK(rows.back().c == doctest::Approx(cstar).epsilon(1e-15));
    std::ostringstream os;
    write_period_csv(os, rows);
    const std::string csv = os.str();
    CHECK(csv.rfind("c,E,T,log_eta,phi,eps,delta,status\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    CHECK(csv.find("-inf") != std::string::npos);
    std::ostringstream again;
    write_period_csv(again, period_scan(0.1, 2.0, 5));
    CHECK(again.str() == csv);
    CHECK_THROWS_AS(period_scan(0.0, 1.0, 3), ContractViolation);
}
