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

#ifndef DYSON_DYNAMICS_SOLUTIONS_HPP
#define DYSON_DYNAMICS_SOLUTIONS_HPP

#include <stdexcept>
#include <vector>

#include "dyson/algebra/rational_function.hpp"
#include "dyson/dynamics/weierstrass.hpp"
#include "dyson/model/dyson.hpp"

namespace dyson {

struct PoleProximity : std::domain_error {
    using std::domain_error::domain_error;
};

/// Uniform grid of real times, endpoints included.
struct TimeGrid {
    double t_min = 0.05, t_max = 1.0;
    int count = 20;
    std::vector<double> points() const;
};

/// g2 = 4/3, g3 = -4(h - 2)/27.
EllipticInvariants phi_invariants(const Rational &h);

/// phi(t) = -sqrt3/2 - (3 sqrt3/2) wp(t) on the diagonal of the cubic truncation.
struct PhiCheck {
    Rational h;
    EllipticInvariants invariants;
    double energy_residual = 0; // |phi'^2 - (h - V(phi))|
    double accel_residual = 0;  // |phi'' - F(phi)|, F = -V'/2
    double wp_residual = 0;     // |wp'^2 - (4 wp^3 - g2 wp - g3)|
    int points = 0;
};

PhiCheck verify_phi(const Rational &h, const TimeGrid &grid = {}, mpfr_prec_t bits = 128);
/// Same check against another diagonal system (used for corrupted controls).
PhiCheck verify_phi(const DiagonalSystem &sys, const Rational &h, const TimeGrid &grid = {}, mpfr_prec_t bits = 128);

/// psi(t) = -3 sqrt3 / w with w = sqrt26 sinh(2it) + 1, a solution of the
/// quartic truncation's diagonal equation.
struct PsiCheck {
    double ode_residual = 0;    // numeric, over the grid
    double energy_residual = 0; // |psi'^2 + V(psi) - h|
    double w_relation_residual = 0; // |w'^2 + 104 + 4(w-1)^2|
    /// Exact identity in w: psi'' computed from w'^2 = -104 - 4(w-1)^2 and
    /// w'' = -4(w-1) equals F(psi).
    bool identity_exact = false;
    RationalFunction acceleration; // psi'' as a function of w
    RationalFunction force;        // F(psi(w))
    /// Energy of the orbit, derived exactly; constant in w.
    FieldElement energy;
    bool energy_constant = false;
    int points = 0;
};

PsiCheck verify_psi(const TimeGrid &grid = {}, mpfr_prec_t bits = 128);

/// p(R) by Horner in the rational-function field.
RationalFunction compose(const ExactPoly &p, const RationalFunction &R);

} // namespace dyson

#endif
