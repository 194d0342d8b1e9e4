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

#include <cmath>
#include <random>

#include "doctest.h"
#include "dyson/model/dyson.hpp"

using namespace dyson;

namespace {

const FieldElement s3 = FieldElement::sqrt_of(3L);
FieldElement Q(long n, long d = 1) { return FieldElement::rational(n, d); }
constexpr double third_pi = M_PI / 3;

} // namespace

TEST_CASE("h_reg examples")
{
    CHECK(h_reg_eval({third_pi, third_pi, 0, 0}) == doctest::Approx(-3 * std::log(std::sqrt(3.0) / 2)).epsilon(1e-15));
    CHECK(h_reg_eval({third_pi, third_pi, 0, 0}) == doctest::Approx(0.4315231).epsilon(1e-7));
    CHECK(h_reg_eval({third_pi, third_pi, 1, 0}) == doctest::Approx(1 - 3 * std::log(std::sqrt(3.0) / 2)).epsilon(1e-15));
    CHECK(h_reg_eval({M_PI / 4, M_PI / 4, 0, 0}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(h_reg_eval({0.0, 1.0, 0, 0}), ContractViolation);
    CHECK_THROWS_AS(h_reg_eval({2.0, 2.0, 0, 0}), ContractViolation);
}

TEST_CASE("h_reg gradient against central differences")
{
    const PhaseState s{0.9, 1.2, 0.3, -0.7};
    const auto g = h_reg_gradient(s);
    const double h = 1e-6;
    auto fd = [&](int k) {
        PhaseState a = s, b = s;
        double *pa[4] = {&a.q1, &a.q2, &a.p1, &a.p2};
        double *pb[4] = {&b.q1, &b.q2, &b.p1, &b.p2};
        *pa[k] += h;
        *pb[k] -= h;
        return (h_reg_eval(a) - h_reg_eval(b)) / (2 * h);
    };
    for (int k = 0; k < 4; ++k) CHECK(g[static_cast<std::size_t>(k)] == doctest::Approx(fd(k)).epsilon(1e-8));
}

TEST_CASE("canonical transform")
{
    FullState<Rational> f;
    f.x = {Rational(2), Rational(2), Rational(2)};
    auto c = canonical_transform(f);
    CHECK(c.q == std::array<Rational, 3>{0, 0, 6});
    CHECK(c.p == std::array<Rational, 3>{0, 0, 0});

    f.y = {1, 1, 1};
    c = canonical_transform(f);
    CHECK(c.p[2] == 1);
    CHECK(3 * c.p[2] == f.y[0] + f.y[1] + f.y[2]);

    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int k = 0; k < 50; ++k) {
        FullState<Rational> r;
        for (int i = 0; i < 3; ++i) {
            r.x[static_cast<std::size_t>(i)] = Rational(d(rng), 7);
            r.y[static_cast<std::size_t>(i)] = Rational(d(rng), 3);
        }
        for (auto &v : r.x) v.canonicalize();
        for (auto &v : r.y) v.canonicalize();
        const auto back = inverse_canonical_transform(canonical_transform(r));
        CHECK(back.x == r.x);
        CHECK(back.y == r.y);
        // y = A^T p from the change of variables
        const auto cc = canonical_transform(r);
        CHECK(r.y[0] == cc.p[0] + cc.p[2]);
        CHECK(r.y[1] == -cc.p[0] + cc.p[1] + cc.p[2]);
        CHECK(r.y[2] == -cc.p[1] + cc.p[2]);
    }
    CHECK(canonical_transform_is_symplectic());
}

TEST_CASE("jacobian matches the linear map")
{
    const auto J = canonical_jacobian();
    for (int j = 0; j < 6; ++j) {
        FullState<Rational> e;
        if (j < 3) e.x[static_cast<std::size_t>(j)] = 1;
        else e.y[static_cast<std::size_t>(j - 3)] = 1;
        const auto c = canonical_transform(e);
        for (int i = 0; i < 3; ++i) {
            CHECK(J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == c.q[static_cast<std::size_t>(i)]);
            CHECK(J[static_cast<std::size_t>(i + 3)][static_cast<std::size_t>(j)] == c.p[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("full Hamiltonian splits into H_reg plus the cyclic part")
{
    FullState<double> f;
    f.x = {2.1, 1.0, 0.05};
    f.y = {0.4, -0.2, 0.9};
    const auto c = canonical_transform(f);
    const double reduced = h_reg_eval({c.q[0], c.q[1], c.p[0], c.p[1]});
    CHECK(h_full_eval(f) == doctest::Approx(reduced + 1.5 * c.p[2] * c.p[2]).epsilon(1e-13));
}

TEST_CASE("Taylor truncation coefficients")
{
    const auto K = taylor_truncate(3).polynomial;
    CHECK(K.coefficient({0, 0, 2, 0}) == Q(1));
    CHECK(K.coefficient({0, 0, 1, 1}) == Q(-1));
    CHECK(K.coefficient({0, 0, 0, 2}) == Q(1));
    CHECK(K.coefficient({2, 0, 0, 0}) == Q(4, 3));
    CHECK(K.coefficient({1, 1, 0, 0}) == Q(4, 3));
    CHECK(K.coefficient({0, 2, 0, 0}) == Q(4, 3));
    CHECK(K.coefficient({2, 1, 0, 0}) == Q(4, 9) * s3);
    CHECK(K.coefficient({1, 2, 0, 0}) == Q(4, 9) * s3);
    CHECK(K.coefficient({3, 0, 0, 0}).is_zero());
    CHECK(K.terms().size() == 8);
    // constant and linear parts vanish
    CHECK(K.homogeneous_part(0).is_zero());
    CHECK(K.homogeneous_part(1).is_zero());

    const auto L = taylor_truncate(4).polynomial;
    CHECK(L.homogeneous_part(3).terms() == K.homogeneous_part(3).terms());
    CHECK(L.coefficient({4, 0, 0, 0}) == Q(4, 9));
    CHECK(L.coefficient({0, 4, 0, 0}) == Q(4, 9));
    CHECK(L.coefficient({3, 1, 0, 0}) == Q(8, 9));
    CHECK(L.coefficient({1, 3, 0, 0}) == Q(8, 9));
    CHECK(L.coefficient({2, 2, 0, 0}) == Q(4, 3));
    CHECK(L.homogeneous_part(4).terms().size() == 5);
    CHECK_THROWS_AS(taylor_truncate(1), ContractViolation);
}

TEST_CASE("Hessian of the truncation")
{
    const auto H = taylor_truncate(4).polynomial;
    auto second = [&](Var a, Var b) { return H.derivative(a).derivative(b).coefficient({0, 0, 0, 0}); };
    CHECK(second(Var::q1, Var::q1) == Q(8, 3));
    CHECK(second(Var::q1, Var::q2) == Q(4, 3));
    CHECK(second(Var::q2, Var::q2) == Q(8, 3));
    CHECK(H.derivative(Var::q1).coefficient({0, 0, 0, 0}).is_zero());
    CHECK(H.derivative(Var::q2).coefficient({0, 0, 0, 0}).is_zero());
}

TEST_CASE("truncation agrees with H_reg near the equilibrium")
{
    const auto L = taylor_truncate(4).polynomial;
    const auto L5 = taylor_truncate(5).polynomial;
    std::mt19937 rng(9);
    std::normal_distribution<double> n(0, 1);
    for (int k = 0; k < 20; ++k) {
        std::array<double, 4> v{n(rng), n(rng), n(rng), n(rng)};
        double norm = 0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double &x : v) x *= 1e-2 / norm;
        const double exact = h_reg_eval({third_pi + v[0], third_pi + v[1], v[2], v[3]}) - equilibrium_energy();
        // C from the size of the degree-5 coefficients
        double c5 = 0;
        const MultiPoly quintic = L5.homogeneous_part(5);
        for (const auto &[e, c] : quintic.terms()) c5 += std::abs(c.to_double());
        CHECK(std::abs(L.evaluate(v) - exact) <= 2 * c5 * 1e-10);
    }
}

TEST_CASE("diagonal reduction by two code paths")
{
    for (int order : {2, 3, 4, 5}) {
        const auto t = taylor_truncate(order);
        const auto a = diagonal_reduce(t);
        const auto b = diagonal_reduce_by_substitution(t);
        CHECK(a.force == b.force);
        CHECK(a.potential == b.potential);
    }
    const ExactPoly q = ExactPoly::x();
    const auto K = diagonal_reduce(taylor_truncate(3));
    CHECK(K.force == ExactPoly{Q(0), Q(-4), Q(-4, 3) * s3});
    CHECK(K.potential == ExactPoly{Q(0), Q(0), Q(4), Q(8, 9) * s3});
    const auto L = diagonal_reduce(taylor_truncate(4));
    CHECK(L.force == ExactPoly{Q(0), Q(-4), Q(-4, 3) * s3, Q(-8)});
    const auto H2 = diagonal_reduce(taylor_truncate(2));
    CHECK(H2.potential == ExactPoly{Q(0), Q(0), Q(4)});
    // q'' = -4 q: frequency 2
    CHECK(H2.force == ExactPoly{Q(0), Q(-4)});
    CHECK(K.force(FieldElement(0)).is_zero());

    TruncatedHamiltonian skew{taylor_truncate(3).polynomial + MultiPoly::variable(Var::q1, 3) * MultiPoly::variable(Var::q1, 3), 3};
    CHECK_THROWS_AS(diagonal_reduce(skew), ContractViolation);
}

TEST_CASE("exact diagonal force")
{
    // q'' = -dH/dq1 on the diagonal of H_reg equals cot q + cot 2q
    for (double q : {0.5, 0.9, third_pi, 1.3}) {
        const auto g = h_reg_gradient({q, q, 0, 0});
        CHECK(-g[0] == doctest::Approx(diagonal_force_exact(q)).epsilon(1e-14));
    }
    CHECK(std::abs(diagonal_force_exact(third_pi)) < 1e-15);
    CHECK(diagonal_force_exact_formula() == "cot q + cot 2q");
}
