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

#include <random>

#include "doctest.h"
#include "dyson/algebra/linear_solve.hpp"
#include "dyson/algebra/modp.hpp"
#include "dyson/algebra/multipoly.hpp"
#include "dyson/algebra/partial_fractions.hpp"
#include "dyson/algebra/rational_function.hpp"
#include "dyson/algebra/roots.hpp"
#include "dyson/algebra/series.hpp"

using namespace dyson;

namespace {

const FieldElement s3 = FieldElement::sqrt_of(3L);
const FieldElement s26 = FieldElement::sqrt_of(26L);
const FieldElement I = FieldElement::imag_unit();

FieldElement random_tower(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::array<Rational, 8> c;
    for (auto &x : c) x = make_rational(num(rng), den(rng));
    return FieldElement::from_tower_coords(c);
}

ExactPoly random_poly(std::mt19937 &rng, int degree)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::vector<FieldElement> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(num(rng));
    if (c.back().is_zero()) c.back() = FieldElement(1);
    return ExactPoly(c);
}

double cabs(const mp::Complex &z) { return abs(z).to_double(); }

ExactPoly W() { return ExactPoly::x(); }
ExactPoly C(long v) { return ExactPoly::constant(FieldElement(v)); }

} // namespace

TEST_CASE("field inverse examples")
{
    CHECK(FieldElement(1).inverse() == FieldElement(1));
    CHECK(s3.inverse() == FieldElement::term(3, make_rational(1, 3)));
    CHECK((FieldElement(1) + I).inverse() == (FieldElement(1) - I) * FieldElement::rational(1, 2));
    CHECK_THROWS_AS(FieldElement().inverse(), DivisionByZero);
}

TEST_CASE("field inverse round trip on random tower elements")
{
    std::mt19937 rng(7);
    for (int k = 0; k < 200; ++k) {
        const FieldElement x = random_tower(rng);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == FieldElement(1));
        CHECK(x.inverse().inverse() == x);
        CHECK(x.inverse().in_tower());
    }
}

TEST_CASE("tower coordinates")
{
    const FieldElement x = FieldElement::rational(1, 2) + s3 * s26 * I;
    const auto c = x.tower_coords();
    CHECK(c[0] == make_rational(1, 2));
    CHECK(c[7] == 1);
    CHECK(FieldElement::from_tower_coords(c) == x);
    CHECK(s3 * s26 == FieldElement::sqrt_of(78L));
    CHECK(I * I == FieldElement(-1));
    CHECK_THROWS_AS(FieldElement::sqrt_of(7L).tower_coords(), ContractViolation);
}

TEST_CASE("complex embedding is a ring homomorphism")
{
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
        const FieldElement a = random_tower(rng), b = random_tower(rng);
        const mp::Complex lhs = (a * b).to_complex(128);
        const mp::Complex rhs = a.to_complex(128) * b.to_complex(128);
        const mp::Complex sum = (a + b).to_complex(128) - (a.to_complex(128) + b.to_complex(128));
        CHECK(cabs(lhs - rhs) < 1e-30 * (1 + cabs(lhs)));
        CHECK(cabs(sum) < 1e-30);
    }
}

TEST_CASE("square roots inside the field")
{
    CHECK(*FieldElement(-26).sqrt() * *FieldElement(-26).sqrt() == FieldElement(-26));
    const FieldElement x = FieldElement(4) + FieldElement(2) * s3; // (1 + sqrt3)^2
    const auto r = x.sqrt();
    REQUIRE(r);
    CHECK(*r * *r == x);
    const auto q = FieldElement::rational(1, 4).sqrt();
    REQUIRE(q);
    CHECK((*q == FieldElement::rational(1, 2) || *q == FieldElement::rational(-1, 2)));
    CHECK(FieldElement(7).sqrt()->generators() == std::vector<FieldElement::Radicand>{7});
}

TEST_CASE("polynomial identities")
{
    std::mt19937 rng(3);
    for (int k = 0; k < 20; ++k) {
        const ExactPoly f = random_poly(rng, 4), g = random_poly(rng, 3), h = random_poly(rng, 2);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g).degree() == f.degree() + g.degree());
        auto [q, r] = divmod(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
    CHECK(ExactPoly().degree() == -1);
    const ExactPoly p = W() * W() - C(3);
    CHECK(p.taylor_shift(FieldElement(1)) == W() * W() + C(2) * W() - C(2));
}

TEST_CASE("square-free factorization")
{
    auto f1 = squarefree_factor(W() * W() - C(2) * W() + C(1));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].first == W() - C(1));
    CHECK(f1[0].second == 2);

    auto f2 = squarefree_factor(W());
    REQUIRE(f2.size() == 1);
    CHECK(f2[0] == std::make_pair(W(), 1));

    auto f3 = squarefree_factor(W() * W() * W() - W());
    ExactPoly prod = C(1);
    for (auto &[f, m] : f3) prod = prod * pow(f, m);
    CHECK(prod == W() * W() * W() - W());
    for (auto &[f, m] : f3) CHECK(gcd(f, f.derivative()).degree() == 0);

    // Dyson-type denominator w^2 (w^2 - 2w + 27)^2
    const ExactPoly D = W() * W() - C(2) * W() + C(27);
    auto f4 = squarefree_factor(C(4) * W() * W() * D * D);
    REQUIRE(f4.size() == 1);
    CHECK(f4[0].second == 2);
    CHECK(f4[0].first == W() * D);
    CHECK_THROWS_AS(squarefree_factor(ExactPoly()), ContractViolation);
}

TEST_CASE("complex roots")
{
    auto r1 = poly_complex_roots(W() * W() + C(1), 128);
    REQUIRE(r1.size() == 2);
    for (auto &r : r1) {
        CHECK(r.multiplicity == 1);
        CHECK(std::abs(std::abs(r.value.im.to_double()) - 1.0) < 1e-30);
        CHECK(std::abs(r.value.re.to_double()) < 1e-30);
    }
    auto r2 = poly_complex_roots((W() - C(1)) * (W() - C(1)), 128);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].multiplicity == 2);

    auto r3 = poly_complex_roots(W() * W() - C(3), 128);
    REQUIRE(r3.size() == 2);
    const mp::Complex sq3 = s3.to_complex(128);
    for (auto &r : r3) {
        const mp::Float d = abs(abs(r.value) - abs(sq3));
        CHECK(d.to_double() < 1e-35);
    }

    std::mt19937 rng(5);
    for (int k = 0; k < 20; ++k) {
        const ExactPoly p = random_poly(rng, 1 + k % 8) * random_poly(rng, 2);
        int total = 0;
        for (auto &r : poly_complex_roots(p, 128)) total += r.multiplicity;
        CHECK(total == p.degree());
    }
}

TEST_CASE("exact roots of the Dyson pole factor")
{
    const ExactPoly D = W() * W() - C(2) * W() + C(27);
    const auto er = exact_roots(W() * W() * D * D);
    CHECK(er.complete);
    REQUIRE(er.roots.size() == 3);
    for (const auto &r : er.roots) CHECK(r.multiplicity == 2);
    CHECK(er.roots[0].value.is_zero());
    CHECK((er.roots[1].value - FieldElement(1)) * (er.roots[1].value - FieldElement(1)) == FieldElement(-26));

    const auto rr = exact_roots((C(2) * W() - C(1)) * (C(3) * W() + C(5)) * (W() * W() + C(1)) * W());
    CHECK(rr.complete);
    CHECK(rr.roots.size() == 5);
    const auto irr = exact_roots(W() * W() * W() - C(2));
    CHECK_FALSE(irr.complete);
}

TEST_CASE("rational function canonical form")
{
    std::mt19937 rng(13);
    for (int k = 0; k < 20; ++k) {
        const ExactPoly f = random_poly(rng, 3), g = random_poly(rng, 2);
        const RationalFunction q(f * g, g);
        CHECK(q == RationalFunction(f));
        CHECK(q.is_polynomial());
    }
    const RationalFunction a(C(2), C(4) * W());
    CHECK(a.den() == W());
    CHECK(a.num() == ExactPoly::constant(FieldElement::rational(1, 2)));
    CHECK_THROWS_AS(RationalFunction(C(1), ExactPoly()), DivisionByZero);
    const RationalFunction x = RationalFunction::variable();
    CHECK((x * x).derivative() == RationalFunction(C(2)) * x);
    CHECK((RationalFunction(1) / x).derivative() == -(RationalFunction(1) / (x * x)));
}

TEST_CASE("partial fractions examples")
{
    const auto pf1 = partial_fractions(RationalFunction(C(1), W() * (W() - C(1))));
    CHECK(pf1.polynomial_part.is_zero());
    CHECK(pf1.order_at_infinity == 2);
    REQUIRE(pf1.poles.size() == 2);
    for (const auto &p : pf1.poles) {
        REQUIRE(p.ladder.size() == 1);
        if (p.pole.is_zero()) {
            CHECK(p.ladder[0] == FieldElement(-1));
        } else {
            CHECK(p.pole == FieldElement(1));
            CHECK(p.ladder[0] == FieldElement(1));
        }
    }
    const auto pf2 = partial_fractions(RationalFunction(C(3) * W(), W() - C(2)));
    CHECK(pf2.polynomial_part == C(3));
    REQUIRE(pf2.poles.size() == 1);
    CHECK(pf2.poles[0].ladder[0] == FieldElement(6));
    CHECK(pf2.order_at_infinity == 0);

    const ExactPoly w1 = W() - C(1);
    const auto pf3 = partial_fractions(RationalFunction(C(1), w1 * w1));
    REQUIRE(pf3.poles.size() == 1);
    CHECK(pf3.poles[0].order == 2);
    CHECK(pf3.poles[0].ladder == std::vector<FieldElement>{FieldElement(0), FieldElement(1)});

    CHECK_THROWS_AS(partial_fractions_numeric(w1, w1 * W(), 128), ContractViolation);
}

TEST_CASE("partial fractions recombine to 1e-30 on random inputs")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> deg(1, 8);
    int checked = 0;
    double worst = 0;
    while (checked < 100) {
        const ExactPoly num = random_poly(rng, deg(rng) - 1);
        const ExactPoly den = random_poly(rng, deg(rng));
        if (gcd(num, den).degree() > 0) continue;
        const auto pf = partial_fractions_numeric(num, den, 128);
        const mp::Complex w(0.37, 0.61, 128);
        const mp::Complex direct = to_complex_poly(num, 128)(w) / to_complex_poly(den, 128)(w);
        const mp::Complex recombined = evaluate(pf, w);
        const double rel = cabs(direct - recombined) / std::max(1.0, cabs(direct));
        worst = std::max(worst, rel);
        ++checked;
    }
    CHECK(worst < 1e-30);
}

TEST_CASE("Laurent expansions")
{
    // 1/(w^2 (w-1)) at 0: -w^-2 - w^-1 - 1 - ...
    const ExactPoly den = W() * W() * (W() - C(1));
    std::vector<std::pair<FieldElement, int>> roots{{FieldElement(0), 2}, {FieldElement(1), 1}};
    const auto lau = laurent_at_root(C(1), den, roots, 0, 3);
    CHECK(lau == std::vector<FieldElement>{FieldElement(-1), FieldElement(-1), FieldElement(-1)});
    // (3w^2+1)/(w^2+w) at infinity: 3 - 3/w + ...
    const auto inf = laurent_at_infinity(C(3) * W() * W() + C(1), W() * W() + W(), 3);
    CHECK(inf[0] == FieldElement(3));
    CHECK(inf[1] == FieldElement(-3));
    CHECK(inf[2] == FieldElement(4));
}

TEST_CASE("truncated multivariate polynomials")
{
    const MultiPoly x = MultiPoly::variable(Var::q1, 4), y = MultiPoly::variable(Var::q2, 3);
    const MultiPoly prod = pow(x + y, 5);
    CHECK(prod.is_zero());
    const MultiPoly s = pow(x + y, 3);
    CHECK(s.cutoff() == 3);
    CHECK(s.coefficient({2, 1, 0, 0}) == FieldElement(3));
    for (const auto &[e, c] : s.terms()) CHECK(total_degree(e) <= 3);

    // sin^2 + cos^2 = 1 through the cutoff
    const MultiPoly u = x * FieldElement(2) + MultiPoly::variable(Var::p1, 6);
    const MultiPoly sn = series_sin(u), cs = series_cos(u);
    CHECK(sn * sn + cs * cs == MultiPoly::constant(FieldElement(1), 4));
    // log1p(x) derivative is 1/(1+x)
    const MultiPoly l = series_log1p(x);
    CHECK(l.coefficient({4, 0, 0, 0}) == FieldElement::rational(-1, 4));
    CHECK(x.swapped() == MultiPoly::variable(Var::q2, 4));
    CHECK_THROWS_AS(series_sin(x + MultiPoly::constant(FieldElement(1), 4)), ContractViolation);
}

TEST_CASE("exact linear solve")
{
    Matrix<FieldElement> a{{FieldElement(1), FieldElement(2)}, {FieldElement(3), FieldElement(4)}, {FieldElement(5), FieldElement(6)}};
    auto ok = solve_linear(a, {FieldElement(5), FieldElement(11), FieldElement(17)});
    CHECK(ok.consistent);
    CHECK(ok.rank == 2);
    CHECK(ok.solution == std::vector<FieldElement>{FieldElement(1), FieldElement(2)});
    auto bad = solve_linear(a, {FieldElement(5), FieldElement(11), FieldElement(18)});
    CHECK_FALSE(bad.consistent);
}

TEST_CASE("prime embedding is a ring map")
{
    const auto emb = PrimeEmbedding::choose({-1, 2, 3, 13});
    ModScope scope(emb.prime());
    std::mt19937 rng(17);
    for (int k = 0; k < 100; ++k) {
        const FieldElement a = random_tower(rng), b = random_tower(rng);
        CHECK(emb.reduce(a * b) == emb.reduce(a) * emb.reduce(b));
        CHECK(emb.reduce(a + b) == emb.reduce(a) + emb.reduce(b));
    }
    CHECK(emb.reduce(I) * emb.reduce(I) == ModP(-1));
    CHECK(emb.reduce(s26) * emb.reduce(s26) == ModP(26));
    CHECK_THROWS_AS(emb.reduce(FieldElement::sqrt_of(7L)), NotReducible);
    const std::uint64_t r = sqrt_mod(2, 1000000007ULL);
    ModScope inner(1000000007ULL);
    CHECK(ModP::raw(r) * ModP::raw(r) == ModP(2));
}
