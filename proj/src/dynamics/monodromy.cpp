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

#include "dyson/dynamics/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dyson/algebra/rational.hpp"

namespace dyson {

namespace {

const double pi = std::acos(-1.0);

// Pick the candidate nearest to prev. Returns the guard ratio: distance
// between the two closest candidates over the movement from prev.
double track(const std::vector<cplx> &cands, cplx &value)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i) {
        if (std::abs(cands[i] - value) < std::abs(cands[best] - value)) best = i;
    }
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cands.size(); ++i) {
        for (std::size_t j = i + 1; j < cands.size(); ++j) sep = std::min(sep, std::abs(cands[i] - cands[j]));
    }
    const double move = std::abs(cands[best] - value);
    value = cands[best];
    return move == 0 ? std::numeric_limits<double>::infinity() : sep / move;
}

std::vector<cplx> square_roots(cplx x)
{
    const cplx r = std::sqrt(x);
    return {r, -r};
}

std::vector<cplx> cube_roots(cplx x)
{
    const cplx r = std::pow(x, 1.0 / 3.0);
    const cplx w = std::polar(1.0, 2 * pi / 3);
    return {r, r * w, r * w * w};
}

struct Branches {
    cplx s, u, sigma, rho;
};

struct Derived {
    cplx B, r1, r2, eta;
};

const double k = std::cbrt(2.0 / 3.0);

cplx radicand(cplx c)
{
    const cplx c2 = c * c;
    return 27.0 * c2 * c2 - 256.0 * c2 * c2 * c2;
}

cplx B_of(cplx c, const Branches &b) { return 16.0 * k * c * c / b.u + 2.0 * k * k * b.u; }

Derived derive(cplx c, const Branches &b)
{
    Derived d;
    d.B = B_of(c, b);
    d.r1 = 0.5 - b.sigma / 2.0 + b.rho / 2.0;
    d.r2 = 0.5 - b.sigma / 2.0 - b.rho / 2.0;
    const cplx eps = std::acos(d.r2) / 2.0 - pi / 3;
    const cplx delta = pi / 3 - std::acos(d.r1) / 2.0;
    d.eta = eps * delta;
    return d;
}

} // namespace

MonodromyResult eta_monodromy(cplx center, double radius, int steps, int loops)
{
    if (!(radius > 0) || steps < 4 || loops < 1) throw ContractViolation("eta_monodromy: bad loop parameters");
    MonodromyResult res;
    const cplx c0 = center - radius; // theta = pi
    res.c_start = c0;

    Branches b;
    b.s = std::sqrt(radicand(c0));
    b.u = std::pow(9.0 * c0 * c0 - std::sqrt(3.0) * b.s, 1.0 / 3.0);
    const cplx B0 = B_of(c0, b);
    b.sigma = std::sqrt(1.0 + B0);
    b.rho = std::sqrt(2.0 - B0 + 2.0 / b.sigma);
    const Derived start = derive(c0, b);
    res.B_before = start.B;
    res.radical_before = b.s;

    double guard = std::numeric_limits<double>::infinity();
    double arg_acc = 0;
    cplx eta_prev = start.eta;
    const long total = static_cast<long>(steps) * loops;
    for (long j = 1; j <= total; ++j) {
        const double theta = pi + 2 * pi * static_cast<double>(j) / steps;
        cplx c = center + std::polar(radius, theta);
        if (j % steps == 0) c = c0; // close each loop exactly
        guard = std::min(guard, track(square_roots(radicand(c)), b.s));
        guard = std::min(guard, track(cube_roots(9.0 * c * c - std::sqrt(3.0) * b.s), b.u));
        const cplx B = B_of(c, b);
        guard = std::min(guard, track(square_roots(1.0 + B), b.sigma));
        guard = std::min(guard, track(square_roots(2.0 - B + 2.0 / b.sigma), b.rho));
        const Derived d = derive(c, b);
        arg_acc += std::arg(d.eta / eta_prev);
        eta_prev = d.eta;
    }
    const Derived end = derive(c0, b);
    res.B_after = end.B;
    res.radical_after = b.s;
    res.min_guard_ratio = guard;
    const double scale = std::max(1e-300, std::abs(res.radical_before));
    res.branch_changed = std::abs(res.radical_after + res.radical_before) < std::abs(res.radical_after - res.radical_before) &&
                         std::abs(res.radical_after + res.radical_before) < 1e-6 * scale;
    res.roots_swapped = std::abs(end.r1 - start.r2) < std::abs(end.r1 - start.r1);
    res.log_eta_winding = arg_acc / (2 * pi);
    if (guard < 3) {
        res.ok = false;
        res.error = "continuation ambiguous: candidate branches closer than 3x the step movement; increase steps";
    }
    return res;
}

MonodromyResult eta_monodromy(double radius, int steps, int loops)
{
    return eta_monodromy(cplx(3.0 * std::sqrt(3.0) / 16.0, 0.0), radius, steps, loops);
}

} // namespace dyson
