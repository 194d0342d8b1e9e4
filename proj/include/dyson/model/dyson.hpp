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

#ifndef DYSON_MODEL_DYSON_HPP
#define DYSON_MODEL_DYSON_HPP

#include <array>
#include <string>

#include "dyson/algebra/multipoly.hpp"
#include "dyson/algebra/poly.hpp"

namespace dyson {

/// Reduced two-degree-of-freedom state.
struct PhaseState {
    double q1 = 0, q2 = 0, p1 = 0, p2 = 0;
};

/// Three particles on the circle: positions x and momenta y.
template <class T> struct FullState {
    std::array<T, 3> x{};
    std::array<T, 3> y{};
};

/// (q1, q2, q3, p1, p2, p3).
template <class T> struct CanonicalState {
    std::array<T, 3> q{};
    std::array<T, 3> p{};
};

/// Kinetic form p1^2 - p1 p2 + p2^2 without a 1/2, so dq1/dt = 2 p1 - p2.
double h_reg_eval(const PhaseState &s);
/// Gradient (dH/dq1, dH/dq2, dH/dp1, dH/dp2).
std::array<double, 4> h_reg_gradient(const PhaseState &s);
/// 1/2 |y|^2 - sum_{i<j} log sin(x_i - x_j) for ordered x1 > x2 > x3 in one cell.
double h_full_eval(const FullState<double> &f);

/// Minimum of the reduced potential, -3 log(sqrt3/2).
double equilibrium_energy();

// q = A x with A = [[1,-1,0],[0,1,-1],[1,1,1]] and y = A^T p.
template <class T> CanonicalState<T> canonical_transform(const FullState<T> &f)
{
    const auto &x = f.x;
    const auto &y = f.y;
    CanonicalState<T> c;
    c.q = {x[0] - x[1], x[1] - x[2], x[0] + x[1] + x[2]};
    // y1 + y2 + y3 = 3 p3, y1 - y3 = p1 + p2, y1 = p1 + p3.
    c.p[2] = (y[0] + y[1] + y[2]) / T(3);
    c.p[0] = y[0] - c.p[2];
    c.p[1] = (y[0] - y[2]) - c.p[0];
    return c;
}

template <class T> FullState<T> inverse_canonical_transform(const CanonicalState<T> &c)
{
    const auto &q = c.q;
    const auto &p = c.p;
    FullState<T> f;
    // x2 = (q3 - q1 + q2) / 3, x1 = x2 + q1, x3 = x2 - q2.
    f.x[1] = (q[2] - q[0] + q[1]) / T(3);
    f.x[0] = f.x[1] + q[0];
    f.x[2] = f.x[1] - q[1];
    f.y = {p[0] + p[2], -p[0] + p[1] + p[2], -p[1] + p[2]};
    return f;
}

/// Exact 6x6 Jacobian d(q,p)/d(x,y) of canonical_transform, rational entries.
std::array<std::array<Rational, 6>, 6> canonical_jacobian();
/// J^T Omega J == Omega in exact arithmetic.
bool canonical_transform_is_symplectic();

/// Exact Taylor polynomial of H_reg at (pi/3, pi/3, 0, 0) in shifted
/// variables, constant term removed, truncated at total degree `order`.
struct TruncatedHamiltonian {
    MultiPoly polynomial;
    int order;
};
TruncatedHamiltonian taylor_truncate(int order);

/// Scalar second-order system on the invariant plane q1 = q2, p1 = p2.
/// For polynomial inputs the force is q'' = force(q) exactly.
struct DiagonalSystem {
    ExactPoly force;
    /// Diagonal potential: H(q, q, 0, 0); energy relation q'^2 = h - potential.
    ExactPoly potential;
};

/// f(q, q, 0, 0) as a polynomial in q; terms carrying momenta are dropped.
ExactPoly on_diagonal(const MultiPoly &f);

/// Path A: Hamilton's equations of the full truncation, restricted to the
/// diagonal (q'' = -dH/dq1 on q1 = q2 = q).
DiagonalSystem diagonal_reduce(const TruncatedHamiltonian &h);
/// Path B: substitute q1 = q2, p1 = p2 first, then use the reduced equation
/// q'' = -(1/2) d/dq H(q, q, 0, 0).
DiagonalSystem diagonal_reduce_by_substitution(const TruncatedHamiltonian &h);

/// Closed-form diagonal force of the untruncated H_reg (unshifted q):
/// q'' = cot q + cot 2q.
double diagonal_force_exact(double q);
std::string diagonal_force_exact_formula();

} // namespace dyson

#endif
