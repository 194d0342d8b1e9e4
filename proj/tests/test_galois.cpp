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
#include <string>
#include <vector>

#include "doctest.h"
#include "dyson/galois/kovacic.hpp"
#include "dyson/galois/lame.hpp"
#include "dyson/galois/verdict.hpp"
#include "dyson/nve/nve.hpp"

using namespace dyson;

namespace {

using RF = RationalFunction;

FieldElement Q(long n, long d = 1) { return FieldElement::rational(n, d); }
ExactPoly P(std::initializer_list<FieldElement> c) { return ExactPoly(c); }
const RF w = RF::variable();
RF C(long n, long d = 1) { return RF(Q(n, d)); }

// sympy normal forms, see the NVE tests for the symmetric pair.
RF dyson_r(const std::string &which)
{
    ExactPoly num;
    if (which == "derived") num = P({Q(17496), Q(-1944), Q(855), Q(-30), Q(3)});
    else if (which == "printed") num = P({Q(17496), Q(-1512), Q(823), Q(-14), Q(3)});
    else num = P({Q(5832), Q(216), Q(327), Q(18), Q(3)});
    const ExactPoly quad = P({Q(27), Q(-2), Q(1)});
    return RF(num, ExactPoly::monomial(Q(4), 2) * quad * quad);
}

// Re-substitutes every certificate independently of the engine's own flag.
void check_certificates(const KovacicVerdict &v, const RF &r)
{
    for (const auto &c : v.certificates) {
        CHECK(c.verified);
        if (c.kovacic_case == 1) {
            const RF u = c.omega + RF(c.P.derivative(), c.P);
            CHECK((u.derivative() + u * u - r).is_zero());
        }
    }
}

bool has_omega(const KovacicVerdict &v, const RF &omega)
{
    for (const auto &c : v.certificates)
        if (c.omega == omega && c.P.degree() == 0) return true;
    return false;
}

} // namespace

TEST_CASE("pole profiles")
{
    const auto inv_sq = pole_profile(RF(1) / (w * w));
    REQUIRE(inv_sq.poles.size() == 1);
    CHECK(*inv_sq.poles[0].location == Q(0));
    CHECK(inv_sq.poles[0].order == 2);
    CHECK(inv_sq.order_at_infinity == 2);

    const auto airy = pole_profile(w);
    CHECK(airy.poles.empty());
    CHECK(airy.order_at_infinity == -1);
    CHECK_FALSE(airy.case1_possible());
    CHECK_FALSE(airy.case2_possible());
    CHECK_FALSE(airy.case3_possible());

    const auto dy = pole_profile(dyson_r("derived"));
    REQUIRE(dy.poles.size() == 3);
    CHECK(dy.exact);
    CHECK(dy.order_at_infinity == 2);
    const FieldElement i26 = FieldElement::imag_unit() * FieldElement::sqrt_of(26L);
    std::vector<FieldElement> want{Q(0), Q(1) + i26, Q(1) - i26};
    for (const auto &p : dy.poles) {
        CHECK(p.order == 2);
        CHECK(std::find(want.begin(), want.end(), *p.location) != want.end());
        // (w - 1)^2 = -26 or w = 0
        const FieldElement c = *p.location;
        CHECK((c.is_zero() || (c - Q(1)) * (c - Q(1)) == Q(-26)));
    }

    const auto cubic = pole_profile(RF(1) / (w * w * w - C(2)));
    CHECK_FALSE(cubic.exact);
    CHECK(cubic.poles.size() == 3);
}

TEST_CASE("Kovacic on elementary equations")
{
    SUBCASE("r = 0 gives 1 and w")
    {
        const auto v = kovacic(RF());
        REQUIRE(v.outcome == KovacicOutcome::case1);
        check_certificates(v, RF());
        std::vector<int> degrees;
        for (const auto &c : v.certificates) degrees.push_back(c.degree);
        CHECK(degrees == std::vector<int>{0, 1});
        CHECK(v.certificates[1].P == ExactPoly::x());
    }
    SUBCASE("r = 1 gives exp(w) and exp(-w)")
    {
        const auto v = kovacic(C(1));
        REQUIRE(v.outcome == KovacicOutcome::case1);
        check_certificates(v, C(1));
        CHECK(has_omega(v, C(1)));
        CHECK(has_omega(v, C(-1)));
    }
    SUBCASE("Airy")
    {
        const auto v = kovacic(w);
        CHECK(v.outcome == KovacicOutcome::not_liouvillian);
        CHECK(v.certificates.empty());
    }
    SUBCASE("Euler equation with irrational exponents")
    {
        // 1 + 4b = 7/4: exponents 1/2 +- sqrt7/4
        const RF r = C(3, 16) / (w * w);
        const auto v = kovacic(r);
        REQUIRE(v.outcome == KovacicOutcome::case1);
        check_certificates(v, r);
        const FieldElement s7 = FieldElement::sqrt_of(7L) * Q(1, 4);
        CHECK(has_omega(v, RF(Q(1, 2) + s7) / w));
        CHECK(has_omega(v, RF(Q(1, 2) - s7) / w));
    }
    SUBCASE("Euler equation with exponents 1/4 and 3/4")
    {
        const RF r = C(-3, 16) / (w * w);
        const auto v = kovacic(r);
        REQUIRE(v.outcome == KovacicOutcome::case1);
        check_certificates(v, r);
        CHECK(has_omega(v, C(1, 4) / w));
        CHECK(has_omega(v, C(3, 4) / w));
    }
    SUBCASE("pole of order four")
    {
        // w exp(+-1/w)
        const RF r = C(1) / (w * w * w * w);
        const auto v = kovacic(r);
        REQUIRE(v.outcome == KovacicOutcome::case1);
        check_certificates(v, r);
        CHECK(has_omega(v, (w + C(1)) / (w * w)));
    }
    SUBCASE("polynomial r of even degree")
    {
        const RF r = w * w + C(3);
        const auto v = kovacic(r);
        REQUIRE(v.outcome == KovacicOutcome::case1);
        check_certificates(v, r);
        REQUIRE(v.certificates.size() == 1);
        CHECK(v.certificates[0].omega == w);
        CHECK(v.certificates[0].P == ExactPoly::x());
    }
    SUBCASE("case 2: w^(1/4) exp(+-2 sqrt w)")
    {
        const RF r = C(1) / w + C(-3, 16) / (w * w);
        const auto v = kovacic(r);
        REQUIRE(v.outcome == KovacicOutcome::case2);
        REQUIRE(v.certificates.size() == 1);
        CHECK(v.certificates[0].verified);
        CHECK(v.certificates[0].omega == C(1, 2) / w);
    }
    SUBCASE("case 3: tetrahedral example")
    {
        const RF wm1 = w - C(1);
        const RF r = C(-3, 16) / (w * w) + C(-2, 9) / (wm1 * wm1) + C(3, 16) / (w * wm1);
        const auto v = kovacic(r);
        REQUIRE(v.outcome == KovacicOutcome::case3);
        REQUIRE(v.certificates.size() == 1);
        CHECK(v.certificates[0].n == 4);
        CHECK(v.certificates[0].verified);
    }
    SUBCASE("Bessel of order one is not Liouvillian")
    {
        CHECK(kovacic(C(1) / w).outcome == KovacicOutcome::not_liouvillian);
    }
}

TEST_CASE("numeric poles")
{
    // Cube roots of 2 are outside the field. Order-1 poles keep case 1 open.
    const auto open = kovacic(C(1) / (w * w * w - C(2)));
    CHECK(open.outcome == KovacicOutcome::indeterminate);
    CHECK_FALSE(open.indeterminate_reason.empty());
    // Same poles, order -1 at infinity: every case is excluded by the orders alone.
    const auto closed = kovacic(w * w * w * w / (w * w * w - C(2)));
    CHECK(closed.outcome == KovacicOutcome::not_liouvillian);
}

TEST_CASE("Kovacic on the quartic-truncation normal forms")
{
    SUBCASE("printed coefficients")
    {
        const auto v = kovacic(dyson_r("printed"));
        CHECK(v.outcome == KovacicOutcome::not_liouvillian);
        CHECK(v.certificates.empty());
        // every case-3 candidate is eliminated by the certified modular test
        CHECK(std::find(v.log.begin(), v.log.end(),
                        "case3 n=12: 8281 candidates, 2676 with integer d >= 0, 2676 ruled out mod p, 0 exact solves") !=
              v.log.end());
    }
    SUBCASE("derived coefficients, symmetric mode")
    {
        // The tangential variation: psi' itself solves it, so case 1 with d = 0.
        const RF r = dyson_r("derived");
        const auto v = kovacic(r);
        REQUIRE(v.outcome == KovacicOutcome::case1);
        check_certificates(v, r);
        const FieldElement i26 = FieldElement::imag_unit() * FieldElement::sqrt_of(26L);
        const RF omega = C(-2) / w + C(3, 4) / (w - RF(Q(1) + i26)) + C(3, 4) / (w - RF(Q(1) - i26));
        CHECK(has_omega(v, omega));
    }
    SUBCASE("derived coefficients, antisymmetric mode")
    {
        const auto v = kovacic(dyson_r("antisymmetric"));
        CHECK(v.outcome == KovacicOutcome::not_liouvillian);
    }
    SUBCASE("engine input equals the algebrized NVE")
    {
        const auto L = derive_variational(taylor_truncate(4));
        CHECK(algebrize(scalar_nve(L, Mode::antisymmetric)).r == dyson_r("antisymmetric"));
        CHECK(algebrize(printed_nve_quartic()).r == dyson_r("printed"));
    }
}

TEST_CASE("modular filter agrees with exact elimination" * doctest::timeout(300))
{
    KovacicOptions exact;
    exact.modular_filter = false;
    const auto v = kovacic(dyson_r("antisymmetric"), exact);
    CHECK(v.outcome == KovacicOutcome::not_liouvillian);
    CHECK(std::find(v.log.begin(), v.log.end(),
                    "case3 n=12: 8281 candidates, 1829 with integer d >= 0, 0 ruled out mod p, 1829 exact solves") !=
          v.log.end());
}

TEST_CASE("shifting w by 1 keeps the outcome")
{
    const RF wm1 = w - C(1);
    const std::vector<RF> corpus{RF(),
                                 C(1),
                                 w,
                                 C(3, 16) / (w * w),
                                 C(-3, 16) / (w * w),
                                 C(1) / (w * w * w * w),
                                 C(1) / w + C(-3, 16) / (w * w),
                                 C(-3, 16) / (w * w) + C(-2, 9) / (wm1 * wm1) + C(3, 16) / (w * wm1),
                                 dyson_r("derived"),
                                 dyson_r("printed")};
    for (const auto &r : corpus) {
        CAPTURE(r.str());
        CHECK(kovacic(r).outcome == kovacic(r.shifted(Q(1))).outcome);
    }
}

TEST_CASE("derivation log is deterministic")
{
    const RF r = dyson_r("antisymmetric");
    const auto a = to_json(kovacic(r)).dump();
    const auto b = to_json(kovacic(r)).dump();
    CHECK(a == b);
    CHECK(a.find("\"outcome\":\"NotLiouvillian\"") != std::string::npos);
}

TEST_CASE("Lame sieve")
{
    const Rational g2(4, 3), g3(0);
    auto sieve = [&](Rational A) { return lame_sieve({A, Rational(-8, 3), g2, g3}); };

    SUBCASE("indices solve n(n+1) = A")
    {
        for (Rational A : {Rational(4), Rational(-12), Rational(6), Rational(3, 4), Rational(-1, 4)}) {
            for (const auto &i : lame_indices(A)) CHECK(i.n * (i.n + Q(1)) == FieldElement(A));
        }
        CHECK(lame_indices(Rational(-1, 4)).size() == 1);
    }
    SUBCASE("A = 4: irrational n, every family fails")
    {
        const auto s = sieve(4);
        for (const auto &i : s.indices) CHECK_FALSE(i.rational);
        CHECK(s.non_commutative());
    }
    SUBCASE("A = -12: complex n")
    {
        const auto s = sieve(-12);
        CHECK(s.non_commutative());
        CHECK_FALSE(s.indices[0].n.is_rational());
    }
    SUBCASE("A = 6: integer n")
    {
        const auto s = sieve(6);
        CHECK(s.lame_hermite);
        CHECK_FALSE(s.non_commutative());
    }
    SUBCASE("A = 3/4: n + 1/2 = 1")
    {
        const auto s = sieve(Rational(3, 4));
        CHECK(s.brioschi_halphen_crawford);
        CHECK_FALSE(s.lame_hermite);
        CHECK_FALSE(s.baldassarri);
    }
    SUBCASE("A = -5/36: n + 1/2 = 1/3")
    {
        const auto s = sieve(Rational(-5, 36));
        CHECK(s.baldassarri);
        CHECK_FALSE(s.baldassarri_intersection_form);
        CHECK_FALSE(s.brioschi_halphen_crawford);
    }
    SUBCASE("A = -1/4: n + 1/2 = 0 is not in N")
    {
        const auto s = sieve(Rational(-1, 4));
        CHECK_FALSE(s.brioschi_halphen_crawford);
        CHECK(s.non_commutative());
    }
    SUBCASE("flags depend on A only")
    {
        for (Rational A : {Rational(4), Rational(6), Rational(3, 4), Rational(-5, 36)}) {
            const auto a = lame_sieve({A, Rational(0), Rational(1), Rational(0)});
            const auto b = lame_sieve({A, Rational(7, 2), Rational(-3), Rational(11, 5)});
            CHECK(a.lame_hermite == b.lame_hermite);
            CHECK(a.brioschi_halphen_crawford == b.brioschi_halphen_crawford);
            CHECK(a.baldassarri == b.baldassarri);
        }
    }
}

TEST_CASE("integrability verdicts")
{
    const auto K = derive_variational(taylor_truncate(3));
    const auto form = substitute_elliptic(scalar_nve(K, Mode::antisymmetric));
    REQUIRE(form.A == Q(-12));
    const auto sieve = lame_sieve({*form.A.as_rational(), *form.B.as_rational(), Rational(4, 3), Rational(0)});
    CHECK(sieve.non_commutative());

    const auto kov = kovacic(dyson_r("printed"));
    std::vector<Evidence> ev{evidence_from(sieve, "K.derived.anti", "K", "derived", "antisymmetric"),
                             evidence_from(kov, "L.printed.sym", "Lambda", "printed", "symmetric")};
    const auto verdicts = verdict_report(ev);
    REQUIRE(verdicts.size() == 2);
    for (const auto &v : verdicts) {
        CHECK(v.status == Integrability::non_integrable);
        CHECK(v.statement == "no additional meromorphic first integral");
        CHECK(v.evidence_ids.size() == 1);
    }

    SUBCASE("a Liouvillian mode alone is inconclusive")
    {
        const auto sym = kovacic(dyson_r("derived"));
        const auto v = verdict_report({evidence_from(sym, "x", "Lambda", "derived", "symmetric")});
        CHECK(v[0].status == Integrability::inconclusive);
    }
    SUBCASE("indeterminate input propagates")
    {
        KovacicVerdict unknown;
        unknown.outcome = KovacicOutcome::indeterminate;
        auto more = ev;
        more.push_back(evidence_from(unknown, "K.extra", "K", "derived", "symmetric"));
        const auto v = verdict_report(more);
        CHECK(v[0].truncation == "K");
        CHECK(v[0].status == Integrability::indeterminate);
        CHECK(v[1].status == Integrability::non_integrable);
    }
}
