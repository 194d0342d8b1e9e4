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

#include "dyson/dynamics/period.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <functional>
#include <vector>

namespace dyson {

namespace {

using mp::Float;

Float num(long v, mpfr_prec_t bits) { return Float(v, bits); }

Float third_pi(mpfr_prec_t bits) { return Float::pi(bits) / num(3, bits); }

void require_open_quarter(double q)
{
    if (!(q > 0 && q < M_PI / 2)) throw ContractViolation("potential_tilde: q outside (0, pi/2)");
}

// Snap window around c*: a few double ulps.
constexpr double snap_rel = 4 * 2.220446049250313e-16;

} // namespace

double potential_tilde(double q)
{
    require_open_quarter(q);
    return -std::log(std::sin(2 * q)) - 2 * std::log(std::sin(q));
}

Float potential_tilde(const Float &q)
{
    const mpfr_prec_t bits = q.bits();
    if (!(q.sign() > 0 && q < Float::pi(bits) / num(2, bits))) throw ContractViolation("potential_tilde: q outside (0, pi/2)");
    return -(log(sin(q * num(2, bits))) + num(2, bits) * log(sin(q)));
}

Float energy_min(mpfr_prec_t bits) { return num(-3, bits) * log(sqrt(num(3, bits)) / num(2, bits)); }

Float c_from_energy(const Float &E) { return exp(-E) / num(2, E.bits()); }

Float energy_from_c(const Float &c) { return -log(c * num(2, c.bits())); }

Float c_star(mpfr_prec_t bits) { return num(3, bits) * sqrt(num(3, bits)) / num(16, bits); }

TurningPointData turning_points_closed(double c, mpfr_prec_t bits) { return turning_points_closed(Float(c, bits)); }

TurningPointData turning_points_closed(const Float &c)
{
    const mpfr_prec_t bits = c.bits();
    const Float cs = c_star(bits);
    if (c.sign() <= 0) throw ContractViolation("turning_points_closed: c must be positive");
    const Float gap = abs(c - cs);
    const bool snap = gap <= cs * Float(snap_rel, bits);
    if (c > cs && !snap) throw ContractViolation("turning_points_closed: c above 3 sqrt3/16 gives complex turning points");

    TurningPointData d;
    d.c = c.to_double();
    d.E = energy_from_c(c).to_double();
    const Float pi3 = third_pi(bits);
    if (snap) {
        d.at_equilibrium = true;
        d.E = energy_min(bits).to_double();
        d.B = 3;
        d.r1 = d.r2 = -0.5;
        d.eps = d.delta = 0;
        d.q_minus = d.q_plus = pi3.to_double();
        return d;
    }
    const Float one = num(1, bits), two = num(2, bits), three = num(3, bits);
    const Float c2 = c * c;
    // Real root of B^3 - 64 c^2 B - 64 c^2 by Cardano.
    const Float inner = sqrt(num(27, bits) * c2 * c2 - num(256, bits) * c2 * c2 * c2);
    const Float u = cbrt(num(9, bits) * c2 - sqrt(three) * inner);
    const Float k = cbrt(two / three);
    const Float B = num(16, bits) * k * c2 / u + two * k * k * u;
    const Float s = sqrt(one + B);
    const Float disc = sqrt(two - B + two / s);
    const Float half = one / two;
    const Float r1 = half - s / two + disc / two;
    const Float r2 = half - s / two - disc / two;
    const Float qm = acos(r1) / two;
    const Float qp = acos(r2) / two;
    d.B = B.to_double();
    d.r1 = r1.to_double();
    d.r2 = r2.to_double();
    d.q_minus = qm.to_double();
    d.q_plus = qp.to_double();
    d.eps = (qp - pi3).to_double();
    d.delta = (pi3 - qm).to_double();
    auto quartic = [&](const Float &r) {
        return abs((one - r) * (one - r) * (one - r * r) - num(16, bits) * c2).to_double();
    };
    d.quartic_residual = std::max(quartic(r1), quartic(r2));
    const Float E = energy_from_c(c);
    d.energy_residual = std::max(abs(E - potential_tilde(qm)).to_double(), abs(E - potential_tilde(qp)).to_double());
    return d;
}

std::pair<Float, Float> turning_points_numeric(const Float &E)
{
    const mpfr_prec_t bits = E.bits();
    if (E <= energy_min(bits)) throw NoOrbit("turning_points_numeric: energy at or below the minimum");
    const Float pi3 = third_pi(bits);
    const Float two = num(2, bits);
    // Vtilde' = -2 cot 2q - 2 cot q
    auto dv = [&](const Float &q) { return -(two * cos(two * q) / sin(two * q) + two * cos(q) / sin(q)); };
    // Root of Vtilde(q) - E on (lo, hi) with Vtilde monotone there.
    auto solve = [&](Float lo, Float hi, bool decreasing) {
        Float x = (lo + hi) / two;
        for (int it = 0; it < 400; ++it) {
            const Float f = potential_tilde(x) - E;
            if (f.is_zero()) break;
            const bool above = f.sign() > 0;
            // Vtilde decreasing on the left branch, increasing on the right.
            if (above == decreasing) lo = x;
            else hi = x;
            Float nx = x - f / dv(x);
            if (!(nx > lo && nx < hi)) nx = (lo + hi) / two;
            const Float step = abs(nx - x);
            x = nx;
            if (step <= ldexp(abs(x), -static_cast<long>(bits) + 4)) break;
        }
        return x;
    };
    // Left bracket: Vtilde -> infinity as q -> 0.
    Float lo = pi3 / two;
    while (potential_tilde(lo) < E) lo = lo / two;
    Float hi = pi3 + (Float::pi(bits) / two - pi3) / two;
    Float gapq = Float::pi(bits) / two - hi;
    while (potential_tilde(hi) < E) {
        gapq = gapq / two;
        hi = Float::pi(bits) / two - gapq;
    }
    return {solve(lo, pi3, true), solve(pi3, hi, false)};
}

std::pair<double, double> turning_points_numeric(double E, mpfr_prec_t bits)
{
    auto [a, b] = turning_points_numeric(Float(E, bits));
    return {a.to_double(), b.to_double()};
}

namespace {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double> &x, std::vector<double> &w)
{
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (z * p1 - p0) / (z * z - 1);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        {
            double p0 = 1, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (z * p1 - p0) / (z * z - 1);
        }
        const double wt = 2 / ((1 - z * z) * dp * dp);
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        w[static_cast<std::size_t>(i)] = wt;
        w[static_cast<std::size_t>(n - 1 - i)] = wt;
    }
}

Float gl_integrate(const std::function<Float(const Float &)> &f, const Float &a, const Float &b, int n)
{
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    const mpfr_prec_t bits = a.bits();
    const Float mid = (a + b) / num(2, bits);
    const Float half = (b - a) / num(2, bits);
    Float acc(0L, bits);
    for (std::size_t i = 0; i < x.size(); ++i) acc += Float(w[i], bits) * f(mid + half * Float(x[i], bits));
    return acc * half;
}

Float adaptive(const std::function<Float(const Float &)> &f, const Float &a, const Float &b, double tol, int depth,
               double &err)
{
    const Float whole = gl_integrate(f, a, b, 16);
    const Float m = (a + b) / num(2, a.bits());
    const Float left = gl_integrate(f, a, m, 16);
    const Float right = gl_integrate(f, m, b, 16);
    const double e = abs(left + right - whole).to_double();
    if (e <= tol || depth >= 30) {
        err += e;
        return left + right;
    }
    return adaptive(f, a, m, tol / 2, depth + 1, err) + adaptive(f, m, b, tol / 2, depth + 1, err);
}

} // namespace

PeriodSample period(double E_in, double tolerance, mpfr_prec_t bits)
{
    if (!(tolerance > 0)) throw ContractViolation("period: tolerance must be positive");
    const Float E(E_in, bits);
    const auto [qm, qp] = turning_points_numeric(E);
    const Float two = num(2, bits);
    const Float span = qp - qm;
    // dq = 2 span sin cos dtheta; the sin and cos cancel the square-root zeros.
    auto integrand = [&](const Float &th) {
        const Float s = sin(th), co = cos(th);
        const Float q = qm + span * s * s;
        Float gap = E - potential_tilde(q);
        if (gap.sign() <= 0) gap = ldexp(num(1, bits), -static_cast<long>(bits));
        return two * span * s * co / sqrt(gap);
    };
    const Float a(0L, bits);
    const Float b = Float::pi(bits) / two;

    PeriodSample out;
    out.E = E_in;
    out.c = c_from_energy(E).to_double();
    const Float pi3 = third_pi(bits);
    const Float eps = qp - pi3, delta = pi3 - qm;
    out.eps = eps.to_double();
    out.delta = delta.to_double();
    out.log_eta = log(eps * delta).to_double();

    Float prev = gl_integrate(integrand, a, b, 8);
    double err = 0;
    bool done = false;
    for (int n = 16; n <= 256; n *= 2) {
        const Float cur = gl_integrate(integrand, a, b, n);
        err = abs(cur - prev).to_double() * 2;
        prev = cur;
        out.nodes = n;
        if (err <= tolerance / 2) {
            done = true;
            break;
        }
    }
    if (!done) {
        double aerr = 0;
        prev = adaptive(integrand, a, b, tolerance / 4, 0, aerr);
        err = aerr * 2;
        out.adaptive = true;
        if (err > tolerance / 2) throw QuadratureFailure("period: tolerance not reached", err);
    }
    const Float T = two * prev;
    out.T = T.to_double();
    out.error_estimate = err;
    out.phi = out.T - out.log_eta;
    return out;
}

namespace {

const double yoshida_w1 = 1.0 / (2.0 - std::cbrt(2.0));
const double yoshida_w0 = -std::cbrt(2.0) / (2.0 - std::cbrt(2.0));

void drift(PhaseState &s, double h)
{
    const double v1 = 2 * s.p1 - s.p2, v2 = 2 * s.p2 - s.p1;
    s.q1 += h * v1;
    s.q2 += h * v2;
}

void kick(PhaseState &s, double h)
{
    const auto g = h_reg_gradient(s);
    s.p1 -= h * g[0];
    s.p2 -= h * g[1];
}

} // namespace

void yoshida_step(PhaseState &s, double h)
{
    const double c1 = yoshida_w1 / 2, c2 = (yoshida_w0 + yoshida_w1) / 2;
    drift(s, c1 * h);
    kick(s, yoshida_w1 * h);
    drift(s, c2 * h);
    kick(s, yoshida_w0 * h);
    drift(s, c2 * h);
    kick(s, yoshida_w1 * h);
    drift(s, c1 * h);
}

ReturnMapResult return_map_period(double E, double step, int periods)
{
    const double emin = equilibrium_energy();
    if (!(E > emin)) throw NoOrbit("return_map_period: energy at or below the minimum");
    if (!(step > 0) || periods < 1) throw ContractViolation("return_map_period: bad step or period count");
    const double pi3 = M_PI / 3;
    const double p0 = std::sqrt(E - emin);
    PhaseState s{pi3, pi3, p0, p0};
    const double h0 = h_reg_eval(s);
    ReturnMapResult res;
    double t = 0;
    double last_crossing = 0;
    while (res.crossings < periods) {
        const PhaseState prev = s;
        yoshida_step(s, step);
        ++res.steps;
        res.max_energy_drift = std::max(res.max_energy_drift, std::abs(h_reg_eval(s) - h0));
        if (prev.q1 - pi3 < 0 && s.q1 - pi3 >= 0) {
            // Secant on the fractional step length.
            double lo = 0, hi = step;
            double flo = prev.q1 - pi3, fhi = s.q1 - pi3;
            double tau = step;
            for (int it = 0; it < 60; ++it) {
                tau = lo - flo * (hi - lo) / (fhi - flo);
                if (!(tau > lo && tau < hi)) tau = (lo + hi) / 2;
                PhaseState probe = prev;
                yoshida_step(probe, tau);
                const double f = probe.q1 - pi3;
                if (std::abs(f) < 1e-15 || hi - lo < 1e-16) break;
                if (f < 0) {
                    lo = tau;
                    flo = f;
                } else {
                    hi = tau;
                    fhi = f;
                }
            }
            last_crossing = t + tau;
            ++res.crossings;
        }
        t += step;
        if (res.steps > 100000000L) throw std::runtime_error("return_map_period: no return within the step budget");
    }
    res.period = last_crossing / periods;
    return res;
}

} // namespace dyson

namespace dyson {

std::vector<PeriodSample> period_scan(double offset_min, double offset_max, int count, double tolerance, mpfr_prec_t bits)
{
    if (count < 1 || !(offset_min > 0) || !(offset_max >= offset_min))
        throw ContractViolation("period_scan: offsets must satisfy 0 < min <= max and count >= 1");
    const Float emin = energy_min(bits);
    std::vector<PeriodSample> rows;
    for (int i = 0; i < count; ++i) {
        const double off = count == 1 ? offset_min : offset_min + (offset_max - offset_min) * i / (count - 1);
        const double E = (emin + Float(off, bits)).to_double();
        try {
            rows.push_back(period(E, tolerance, bits));
        } catch (const QuadratureFailure &e) {
            PeriodSample bad;
            bad.E = E;
            bad.c = c_from_energy(Float(E, bits)).to_double();
            bad.T = bad.log_eta = bad.phi = std::numeric_limits<double>::quiet_NaN();
            bad.error_estimate = e.achieved_error;
            bad.status = "quadrature_failure";
            rows.push_back(bad);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const PeriodSample &a, const PeriodSample &b) { return a.c < b.c; });
    PeriodSample limit;
    limit.c = c_star(bits).to_double();
    limit.E = emin.to_double();
    limit.T = M_PI;
    limit.log_eta = -std::numeric_limits<double>::infinity();
    limit.phi = std::numeric_limits<double>::infinity();
    limit.status = "limit";
    rows.push_back(limit);
    return rows;
}

void write_period_csv(std::ostream &os, const std::vector<PeriodSample> &rows)
{
    auto num = [](double v) {
        if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
        if (std::isnan(v)) return std::string("nan");
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    os << "c,E,T,log_eta,phi,eps,delta,status\n";
    for (const auto &r : rows) {
        os << num(r.c) << ',' << num(r.E) << ',' << num(r.T) << ',' << num(r.log_eta) << ',' << num(r.phi) << ','
           << num(r.eps) << ',' << num(r.delta) << ',' << r.status << '\n';
    }
}

} // namespace dyson
