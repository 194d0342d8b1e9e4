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

#include "dyson/nve/nve.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "dyson/dynamics/solutions.hpp"
#include "dyson/io/exact_json.hpp"

namespace dyson {

namespace {

using cd = std::complex<double>;

const FieldElement sqrt3 = FieldElement::sqrt_of(3L);

double eval_real(const ExactPoly &p, double x)
{
    double acc = 0;
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

// Double-precision copy of an exact polynomial for the integrators.
struct RealPoly {
    std::vector<double> c;
    explicit RealPoly(const ExactPoly &p)
    {
        for (const auto &x : p.coeffs()) c.push_back(x.to_double());
    }
    double operator()(double x) const
    {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

cd eval_complex(const ExactPoly &p, cd x)
{
    cd acc = 0;
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

cd eval_complex(const RationalFunction &f, cd x) { return eval_complex(f.num(), x) / eval_complex(f.den(), x); }

ExactPoly constant(const FieldElement &c) { return ExactPoly::constant(c); }

// Classical RK4 on a fixed-size state.
template <class V> void rk4(V &y, double t, double h, const std::function<V(double, const V &)> &f)
{
    auto axpy = [](const V &a, double s, const V &b) {
        V r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
        return r;
    };
    const V k1 = f(t, y);
    const V k2 = f(t + h / 2, axpy(y, h / 2, k1));
    const V k3 = f(t + h / 2, axpy(y, h / 2, k2));
    const V k4 = f(t + h, axpy(y, h, k3));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

int sigma(Mode m) { return m == Mode::symmetric ? 1 : -1; }

} // namespace

std::string to_string(Mode m) { return m == Mode::symmetric ? "symmetric" : "antisymmetric"; }

ExactPoly VariationalSystem::trace() const
{
    ExactPoly t;
    for (std::size_t i = 0; i < 4; ++i) t += matrix[i][i];
    return t;
}

std::array<std::array<double, 4>, 4> VariationalSystem::evaluate(double q) const
{
    std::array<std::array<double, 4>, 4> m{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[i][j] = eval_real(matrix[i][j], q);
    return m;
}

VariationalSystem derive_variational(const TruncatedHamiltonian &h)
{
    if (!(h.polynomial.swapped() == h.polynomial)) throw ContractViolation("derive_variational: Hamiltonian is not swap-symmetric");
    const std::array<Var, 4> vars{Var::q1, Var::q2, Var::p1, Var::p2};
    VariationalSystem vs;
    vs.order = h.order;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 4; ++i) {
            // d/dt z_i = sum_j (J Hess)_ij z_j with J = [[0, I], [-I, 0]]
            const bool position_row = i < 2;
            const Var row_var = position_row ? vars[i + 2] : vars[i - 2];
            const MultiPoly second = h.polynomial.derivative(row_var).derivative(vars[j]);
            for (const auto &[e, c] : second.terms()) {
                if (e[2] != 0 || e[3] != 0) throw ContractViolation("derive_variational: Hessian depends on the momenta");
            }
            const ExactPoly entry = on_diagonal(second);
            vs.matrix[i][j] = position_row ? entry : -entry;
        }
    }
    return vs;
}

ScalarNVE scalar_nve(const VariationalSystem &vs, Mode mode)
{
    const FieldElement s(sigma(mode));
    auto combine = [&](std::size_t r0, std::size_t r1) {
        std::array<ExactPoly, 4> row;
        for (std::size_t j = 0; j < 4; ++j) row[j] = vs.matrix[r0][j] + vs.matrix[r1][j] * s;
        return row;
    };
    // xi' = (row0 + s row1) z must be a constant multiple of eta1 + s eta2.
    const auto top = combine(0, 1);
    if (!top[0].is_zero() || !top[1].is_zero() || top[2].degree() > 0 || !(top[3] == top[2] * s) || top[2].is_zero())
        throw ContractViolation("scalar_nve: " + to_string(mode) + " combination does not decouple at first order");
    // eta' combination must be m(q) (xi1 + s xi2).
    const auto bottom = combine(2, 3);
    if (!bottom[2].is_zero() || !bottom[3].is_zero() || !(bottom[1] == bottom[0] * s))
        throw ContractViolation("scalar_nve: " + to_string(mode) + " combination does not decouple at second order");
    ScalarNVE out;
    out.velocity_scale = top[2].coeff(0);
    out.a = bottom[0] * out.velocity_scale;
    out.mode = mode;
    out.order = vs.order;
    return out;
}

ScalarNVE printed_nve_quartic()
{
    ScalarNVE out;
    out.a = ExactPoly{FieldElement(-4), FieldElement::rational(-8, 9) * sqrt3, FieldElement(-24)};
    out.mode = Mode::symmetric;
    out.order = 4;
    out.variant = "printed";
    out.velocity_scale = FieldElement(1);
    return out;
}

EllipticForm substitute_elliptic(const ScalarNVE &nve)
{
    if (nve.a.degree() > 1) throw ContractViolation("substitute_elliptic: coefficient must be affine in q");
    const FieldElement a0 = nve.a.coeff(0), a1 = nve.a.coeff(1);
    EllipticForm e;
    e.A = -(a1 * FieldElement::rational(3, 2) * sqrt3);
    e.B = a0 - a1 * FieldElement::rational(1, 2) * sqrt3;
    e.matches_printed = e.A == e.printed_A && e.B == e.printed_B;
    return e;
}

AlgebraizedODE algebrize(const ScalarNVE &nve)
{
    if (nve.order != 4) throw ContractViolation("algebrize: the hyperbolic base solution belongs to the quartic truncation");
    const ExactPoly w = ExactPoly::x();
    const ExactPoly wm1 = w - constant(FieldElement(1));
    AlgebraizedODE out;
    out.variant = nve.variant;
    out.wdot2 = constant(FieldElement(-104)) - constant(FieldElement(4)) * wm1 * wm1;
    const ExactPoly wddot = constant(FieldElement(-4)) * wm1;
    const RationalFunction D(out.wdot2);
    const RationalFunction psi(constant(FieldElement(-3) * sqrt3), w);
    const RationalFunction a = compose(nve.a, psi);
    // xi_tt = xi'' w'^2 + xi' w''
    out.p = RationalFunction(wddot) / D;
    out.q = -a / D;
    out.r = out.p * out.p / RationalFunction(4) + out.p.derivative() / RationalFunction(2) - out.q;
    const RationalFunction D1 = D.derivative(), D2 = D1.derivative();
    const RationalFunction alt = (RationalFunction(4) * D * D2 - RationalFunction(3) * D1 * D1) / (RationalFunction(16) * D * D) + a / D;
    out.normal_form_identity = alt == out.r;
    return out;
}

FlowOracleResult nve_flow_oracle(const VariationalSystem &vs, const ScalarNVE &nve, const FlowOracleOptions &opt)
{
    if (vs.order != nve.order) throw ContractViolation("nve_flow_oracle: NVE and variational system come from different truncations");
    if (!(opt.energy > 0) || opt.steps_per_period < 100) throw ContractViolation("nve_flow_oracle: bad options");
    const DiagonalSystem diag = diagonal_reduce(taylor_truncate(vs.order));
    const RealPoly force(diag.force), potential(diag.potential), coeff(nve.a);
    auto energy = [&](double q, double v) { return v * v + potential(q); };
    std::vector<RealPoly> entries;
    for (const auto &row : vs.matrix)
        for (const auto &e : row) entries.emplace_back(e);
    auto matrix_at = [&](double q) {
        std::array<std::array<double, 4>, 4> m{};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m[i][j] = entries[4 * i + j](q);
        return m;
    };

    // Base period: first upward crossing of q = 0.
    using B2 = std::array<double, 2>;
    const std::function<B2(double, const B2 &)> fb = [&](double, const B2 &y) { return B2{y[1], force(y[0])}; };
    const double dt0 = 1e-3;
    B2 y{0.0, std::sqrt(opt.energy)};
    double t = 0, period = 0;
    for (long n = 0;; ++n) {
        if (n > 10000000L) throw std::runtime_error("nve_flow_oracle: base orbit does not return");
        B2 next = y;
        rk4(next, t, dt0, fb);
        if (t > 0 && y[0] < 0 && next[0] >= 0) {
            double lo = 0, hi = dt0, flo = y[0], fhi = next[0], tau = dt0;
            for (int it = 0; it < 80; ++it) {
                tau = lo - flo * (hi - lo) / (fhi - flo);
                if (!(tau > lo && tau < hi)) tau = (lo + hi) / 2;
                B2 probe = y;
                rk4(probe, t, tau, fb);
                if (std::abs(probe[0]) < 1e-16 || hi - lo < 1e-17) break;
                if (probe[0] < 0) {
                    lo = tau;
                    flo = probe[0];
                } else {
                    hi = tau;
                    fhi = probe[0];
                }
            }
            period = t + tau;
            break;
        }
        y = next;
        t += dt0;
    }

    // State: base (2) | tagged variation (4) | fundamental matrix (16) |
    // scalar NVE (2) | two scalar solutions for the Wronskian (4).
    using S = std::array<double, 28>;
    const double shift = opt.coefficient_shift;
    const std::function<S(double, const S &)> f = [&](double, const S &s) {
        S d{};
        d[0] = s[1];
        d[1] = force(s[0]);
        const auto m = matrix_at(s[0]);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) d[2 + i] += m[i][j] * s[2 + j];
        for (std::size_t c = 0; c < 4; ++c)
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) d[6 + 4 * c + i] += m[i][j] * s[6 + 4 * c + j];
        const double a = coeff(s[0]) + shift;
        d[22] = s[23];
        d[23] = a * s[22];
        d[24] = s[25];
        d[25] = a * s[24];
        d[26] = s[27];
        d[27] = a * s[26];
        return d;
    };
    const double sg = sigma(nve.mode);
    S s{};
    s[0] = 0;
    s[1] = std::sqrt(opt.energy);
    s[2] = opt.xi0;
    s[3] = sg * opt.xi0;
    s[4] = opt.eta0;
    s[5] = sg * opt.eta0;
    for (std::size_t c = 0; c < 4; ++c) s[6 + 4 * c + c] = 1;
    const auto m0 = matrix_at(0.0);
    double dxi = 0;
    for (std::size_t j = 0; j < 4; ++j) dxi += (m0[0][j] + sg * m0[1][j]) * s[2 + j];
    s[22] = s[2] + sg * s[3];
    s[23] = dxi;
    s[24] = 1;
    s[25] = 0;
    s[26] = 0;
    s[27] = 1;

    FlowOracleResult res;
    res.base_period = period;
    res.steps = opt.steps_per_period;
    const double h = period / opt.steps_per_period;
    const double e0 = energy(s[0], s[1]);
    for (int n = 0; n < opt.steps_per_period; ++n) {
        rk4(s, n * h, h, f);
        res.deviation = std::max(res.deviation, std::abs(s[2] + sg * s[3] - s[22]));
        const double W = s[24] * s[27] - s[26] * s[25];
        res.wronskian_drift = std::max(res.wronskian_drift, std::abs(W - 1));
        res.base_energy_drift = std::max(res.base_energy_drift, std::abs(energy(s[0], s[1]) - e0));
    }
    Eigen::Matrix4d F;
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i) F(i, c) = s[static_cast<std::size_t>(6 + 4 * c + i)];
    res.monodromy_det = F.determinant();
    return res;
}

double gauge_check(const ScalarNVE &nve, const AlgebraizedODE &ode, double t_end, int steps)
{
    if (!(t_end > 0 && t_end < M_PI / 4) || steps < 10)
        throw ContractViolation("gauge_check: need 0 < t_end < pi/4 (w' vanishes at pi/4)");
    const double r26 = std::sqrt(26.0), s3 = std::sqrt(3.0);
    auto w_of = [&](double t) { return r26 * std::sinh(cd(0, 2 * t)) + 1.0; };
    auto wd_of = [&](double t) { return cd(0, 2) * r26 * std::cosh(cd(0, 2 * t)); };
    auto wdd_of = [&](double t) { return -4.0 * r26 * std::sinh(cd(0, 2 * t)); };
    using S = std::array<cd, 4>; // xi, xi', zeta, zeta'
    // RK4 inline: the generic helper is real-valued.
    auto f = [&](double t, const S &y) {
        const cd w = w_of(t), wd = wd_of(t), wdd = wdd_of(t);
        const cd a = eval_complex(nve.a, -3.0 * s3 / w);
        const cd r = eval_complex(ode.r, w);
        return S{y[1], a * y[0], y[3], r * wd * wd * y[2] + wdd / wd * y[3]};
    };
    S y{cd(1), cd(0.3), cd(1), cd(0.3) + eval_complex(ode.p, w_of(0)) * wd_of(0) / 2.0};
    const double h = t_end / steps;
    double worst = 0;
    for (int n = 0; n < steps; ++n) {
        const double t = n * h;
        const S k1 = f(t, y);
        S tmp;
        for (int i = 0; i < 4; ++i) tmp[i] = y[i] + h / 2 * k1[i];
        const S k2 = f(t + h / 2, tmp);
        for (int i = 0; i < 4; ++i) tmp[i] = y[i] + h / 2 * k2[i];
        const S k3 = f(t + h / 2, tmp);
        for (int i = 0; i < 4; ++i) tmp[i] = y[i] + h * k3[i];
        const S k4 = f(t + h, tmp);
        for (int i = 0; i < 4; ++i) y[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        const double tn = t + h;
        const cd expected = eval_complex(ode.p, w_of(tn)) * wd_of(tn) / 2.0;
        worst = std::max(worst, std::abs(y[3] / y[2] - y[1] / y[0] - expected));
    }
    return worst;
}

nlohmann::json to_json(const ScalarNVE &nve)
{
    return {{"order", nve.order},
            {"mode", to_string(nve.mode)},
            {"variant", nve.variant},
            {"a", to_json(nve.a)},
            {"velocity_scale", to_json(nve.velocity_scale)}};
}

nlohmann::json to_json(const AlgebraizedODE &ode)
{
    return {{"variant", ode.variant},
            {"p", to_json(ode.p)},
            {"q", to_json(ode.q)},
            {"r", to_json(ode.r)},
            {"wdot2", to_json(ode.wdot2)},
            {"normal_form_identity", ode.normal_form_identity}};
}

nlohmann::json to_json(const EllipticForm &e)
{
    return {{"A", to_json(e.A)},
            {"B", to_json(e.B)},
            {"printed_A", to_json(e.printed_A)},
            {"printed_B", to_json(e.printed_B)},
            {"matches_printed", e.matches_printed}};
}

} // namespace dyson
