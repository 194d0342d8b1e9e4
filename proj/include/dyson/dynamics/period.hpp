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

#ifndef DYSON_DYNAMICS_PERIOD_HPP
#define DYSON_DYNAMICS_PERIOD_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyson/algebra/mpfloat.hpp"
#include "dyson/model/dyson.hpp"

namespace dyson {

/// Energy at or below the bottom of the well: no periodic orbit.
struct NoOrbit : std::domain_error {
    using std::domain_error::domain_error;
};

/// Quadrature that did not meet its tolerance.
struct QuadratureFailure : std::runtime_error {
    QuadratureFailure(const std::string &what, double achieved) : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

/// Diagonal potential -log sin 2q - 2 log sin q on 0 < q < pi/2.
double potential_tilde(double q);
mp::Float potential_tilde(const mp::Float &q);
/// Bottom of the well, -3 log(sqrt3/2).
mp::Float energy_min(mpfr_prec_t bits);

/// c = 1/(2 e^E) and back. The equilibrium sits at c* = 3 sqrt3/16.
mp::Float c_from_energy(const mp::Float &E);
mp::Float energy_from_c(const mp::Float &c);
mp::Float c_star(mpfr_prec_t bits);

struct TurningPointData {
    double c = 0, E = 0, B = 0;
    double r1 = 0, r2 = 0; // r1 >= r2; cos 2q at the two turning points
    double eps = 0, delta = 0;
    double q_minus = 0, q_plus = 0;
    /// max |(1-r)^2 (1-r^2) - 16c^2| over both roots
    double quartic_residual = 0;
    /// max |E - Vtilde(q)| over both turning points
    double energy_residual = 0;
    /// True when c was snapped onto c* (exact equilibrium data returned).
    bool at_equilibrium = false;
};

/// Closed-form turning points from the real root B of the resolvent cubic
/// B^3 - 64 c^2 B - 64 c^2 = 0. Evaluated in `bits` of precision. Within a few
/// double ulps of c* the exact equilibrium data (r = -1/2, eps = delta = 0)
/// is returned, since the double root there is ill-conditioned.
TurningPointData turning_points_closed(double c, mpfr_prec_t bits = 128);
TurningPointData turning_points_closed(const mp::Float &c);

/// Bracketed Newton/bisection roots of E - Vtilde on (0, pi/3) and (pi/3, pi/2).
std::pair<double, double> turning_points_numeric(double E, mpfr_prec_t bits = 128);
std::pair<mp::Float, mp::Float> turning_points_numeric(const mp::Float &E);

struct PeriodSample {
    double c = 0, E = 0;
    double T = 0;
    double log_eta = 0;
    double phi = 0;
    double eps = 0, delta = 0;
    double error_estimate = 0;
    int nodes = 0;
    bool adaptive = false;
    /// "ok", "limit" for the equilibrium row (T = pi, log_eta = -inf), or
    /// "quadrature_failure" (T is NaN, error_estimate holds the achieved error).
    std::string status = "ok";
};

/// T = 2 int_{q-}^{q+} dq / sqrt(E - Vtilde), with q = q- + (q+ - q-) sin^2 theta
/// removing both endpoint singularities. Gauss-Legendre with doubling, then
/// adaptive bisection if the tolerance is not reached.
PeriodSample period(double E, double tolerance = 1e-10, mpfr_prec_t bits = 128);

/// Samples at E = E_min + offset for `count` offsets spaced evenly in
/// [offset_min, offset_max], sorted by increasing c, followed by the
/// E -> E_min limit row. A row whose quadrature fails is kept and marked.
std::vector<PeriodSample> period_scan(double offset_min, double offset_max, int count, double tolerance = 1e-10,
                                      mpfr_prec_t bits = 128);

/// Header c,E,T,log_eta,phi,eps,delta,status; 12 significant digits.
void write_period_csv(std::ostream &os, const std::vector<PeriodSample> &rows);

/// Symplectic 4th-order (Yoshida) integration of the full H_reg flow.
struct ReturnMapResult {
    double period = 0;
    double max_energy_drift = 0;
    int crossings = 0;
    long steps = 0;
};

/// Starts on the diagonal at q1 = q2 = pi/3 with the energy E and measures
/// the mean time between upward crossings of q1 = pi/3 over `periods` returns.
ReturnMapResult return_map_period(double E, double step = 1e-3, int periods = 1);

/// One Yoshida step of the reduced flow (kinetic p1^2 - p1 p2 + p2^2).
void yoshida_step(PhaseState &s, double h);

} // namespace dyson

#endif
