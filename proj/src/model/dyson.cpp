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

#include "dyson/model/dyson.hpp"

#include <cmath>

#include "dyson/algebra/series.hpp"

namespace dyson {

namespace {

void require_cell(double q1, double q2)
{
    if (!(std::sin(q1) > 0 && std::sin(q2) > 0 && std::sin(q1 + q2) > 0 && q1 > 0 && q2 > 0 && q1 + q2 < M_PI)) {
        throw ContractViolation("state outside the singular-free cell around the equilibrium");
    }
}

} // namespace

double h_reg_eval(const PhaseState &s)
{
    require_cell(s.q1, s.q2);
    return s.p1 * s.p1 - s.p1 * s.p2 + s.p2 * s.p2 - std::log(std::sin(s.q1)) - std::log(std::sin(s.q2)) -
           std::log(std::sin(s.q1 + s.q2));
}

std::array<double, 4> h_reg_gradient(const PhaseState &s)
{
    require_cell(s.q1, s.q2);
    const double c12 = 1.0 / std::tan(s.q1 + s.q2);
    return {-1.0 / std::tan(s.q1) - c12, -1.0 / std::tan(s.q2) - c12, 2 * s.p1 - s.p2, 2 * s.p2 - s.p1};
}

double h_full_eval(const FullState<double> &f)
{
    double kin = 0;
    for (double y : f.y) kin += 0.5 * y * y;
    const double d12 = f.x[0] - f.x[1], d23 = f.x[1] - f.x[2], d13 = f.x[0] - f.x[2];
    require_cell(d12, d23);
    return kin - std::log(std::sin(d12)) - std::log(std::sin(d23)) - std::log(std::sin(d13));
}

double equilibrium_energy() { return -3.0 * std::log(std::sqrt(3.0) / 2.0); }

std::array<std::array<Rational, 6>, 6> canonical_jacobian()
{
    // q = A x, p = A^{-T} y.
    const Rational A[3][3] = {{1, -1, 0}, {0, 1, -1}, {1, 1, 1}};
    // A^{-T} follows from y = A^T p solved above: p3 = (y1+y2+y3)/3,
    // p1 = y1 - p3, p2 = y1 - y3 - p1.
    const Rational third(1, 3);
    const Rational B[3][3] = {{1 - third, -third, -third}, {third, third, third - 1}, {third, third, third}};
    std::array<std::array<Rational, 6>, 6> J{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            J[i][j] = A[i][j];
            J[i + 3][j + 3] = B[i][j];
        }
    }
    return J;
}

bool canonical_transform_is_symplectic()
{
    const auto J = canonical_jacobian();
    auto omega = [](int i, int j) -> Rational {
        if (j == i + 3) return 1;
        if (i == j + 3) return -1;
        return 0;
    };
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            Rational acc = 0;
            for (int k = 0; k < 6; ++k) {
                for (int l = 0; l < 6; ++l) acc += J[k][i] * omega(k, l) * J[l][j];
            }
            if (acc != omega(i, j)) return false;
        }
    }
    return true;
}

TruncatedHamiltonian taylor_truncate(int order)
{
    if (order < 2) throw ContractViolation("taylor_truncate: order must be at least 2");
    const MultiPoly u1 = MultiPoly::variable(Var::q1, order);
    const MultiPoly u2 = MultiPoly::variable(Var::q2, order);
    const MultiPoly p1 = MultiPoly::variable(Var::p1, order);
    const MultiPoly p2 = MultiPoly::variable(Var::p2, order);
    // log sin(a + u) - log sin a = log(cos u + cot(a) sin u).
    auto log_sin_shift = [](const MultiPoly &u, const FieldElement &cot_a) {
        const MultiPoly arg = (series_cos(u) - MultiPoly::constant(FieldElement(1), u.cutoff())) + series_sin(u) * cot_a;
        return series_log1p(arg);
    };
    const FieldElement cot60 = FieldElement::sqrt_of(3L) * FieldElement::rational(1, 3);
    MultiPoly h = p1 * p1 - p1 * p2 + p2 * p2;
    h -= log_sin_shift(u1, cot60);
    h -= log_sin_shift(u2, cot60);
    h -= log_sin_shift(u1 + u2, -cot60);
    return {h, order};
}

namespace {

void require_symmetric(const TruncatedHamiltonian &h)
{
    if (!(h.polynomial.swapped() == h.polynomial)) throw ContractViolation("diagonal_reduce: Hamiltonian is not swap-symmetric");
}

} // namespace

ExactPoly on_diagonal(const MultiPoly &f)
{
    std::vector<FieldElement> c(static_cast<std::size_t>(f.cutoff()) + 1);
    for (const auto &[e, v] : f.terms()) {
        if (e[2] != 0 || e[3] != 0) continue;
        c[static_cast<std::size_t>(e[0] + e[1])] += v;
    }
    return ExactPoly(c);
}

DiagonalSystem diagonal_reduce(const TruncatedHamiltonian &h)
{
    require_symmetric(h);
    const MultiPoly dq1 = h.polynomial.derivative(Var::q1);
    for (const auto &[e, v] : dq1.terms()) {
        if (e[2] != 0 || e[3] != 0) throw ContractViolation("diagonal_reduce: potential depends on momenta");
    }
    return {-on_diagonal(dq1), on_diagonal(h.polynomial)};
}

DiagonalSystem diagonal_reduce_by_substitution(const TruncatedHamiltonian &h)
{
    require_symmetric(h);
    const ExactPoly v = on_diagonal(h.polynomial);
    return {v.derivative() * FieldElement::rational(-1, 2), v};
}

double diagonal_force_exact(double q) { return 1.0 / std::tan(q) + 1.0 / std::tan(2 * q); }

std::string diagonal_force_exact_formula() { return "cot q + cot 2q"; }

} // namespace dyson
