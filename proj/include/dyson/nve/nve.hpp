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

#ifndef DYSON_NVE_NVE_HPP
#define DYSON_NVE_NVE_HPP

#include <array>
#include <string>

#include "json.hpp"

#include "dyson/algebra/rational_function.hpp"
#include "dyson/model/dyson.hpp"

namespace dyson {

/// xi = xi1 + xi2 (symmetric) or xi1 - xi2 (antisymmetric).
enum class Mode { symmetric, antisymmetric };
std::string to_string(Mode m);

using PolyMatrix4 = std::array<std::array<ExactPoly, 4>, 4>;

/// Linearization J Hess(H) along the diagonal, in the variables
/// (xi1, xi2, eta1, eta2) = (dq1, dq2, dp1, dp2), entries polynomial in q.
struct VariationalSystem {
    int order = 0; // 3: cubic truncation, 4: quartic
    PolyMatrix4 matrix;
    ExactPoly trace() const;
    std::array<std::array<double, 4>, 4> evaluate(double q) const;
};

VariationalSystem derive_variational(const TruncatedHamiltonian &h);

struct ScalarNVE {
    ExactPoly a; // xi'' = a(q) xi
    Mode mode = Mode::symmetric;
    int order = 0;
    std::string variant = "derived";
    /// xi' = velocity_scale * (eta1 +/- eta2)
    FieldElement velocity_scale;
};

/// Eliminates eta from the tagged combination. Throws ContractViolation if
/// the combination does not decouple (no swap symmetry, or momentum-position
/// coupling that would leave q' terms).
ScalarNVE scalar_nve(const VariationalSystem &vs, Mode mode);

/// The quartic-truncation NVE as printed, a = -(4 + (8 sqrt3/9) q + 24 q^2).
ScalarNVE printed_nve_quartic();

/// a(phi) with phi = -sqrt3/2 - (3 sqrt3/2) wp rewritten as A wp + B.
struct EllipticForm {
    FieldElement A, B;
    /// The printed Lame form xi'' = (4 wp - 8/3) xi.
    FieldElement printed_A = FieldElement(4), printed_B = FieldElement::rational(-8, 3);
    bool matches_printed = false;
};
EllipticForm substitute_elliptic(const ScalarNVE &nve);

/// xi'' + p xi' + q xi = 0 in w = sqrt26 sinh(2it) + 1 along psi = -3 sqrt3/w,
/// and its normal form zeta'' = r zeta.
struct AlgebraizedODE {
    std::string variant;
    RationalFunction p, q, r;
    ExactPoly wdot2; // w'^2 as a polynomial in w
    /// r recomputed as (4 D D'' - 3 D'^2)/(16 D^2) + a/D with D = w'^2 agrees.
    bool normal_form_identity = false;
};
AlgebraizedODE algebrize(const ScalarNVE &nve);

struct FlowOracleOptions {
    double energy = 1.0;            // base orbit q(0) = 0, q'(0) = sqrt(energy)
    double xi0 = 1.0, eta0 = 0.25;  // tagged initial variation (xi, +/-xi, eta, +/-eta)
    double coefficient_shift = 0.0; // added to a in the scalar equation (control runs)
    int steps_per_period = 20000;
};

struct FlowOracleResult {
    double deviation = 0;      // max |xi1 +/- xi2 - xi_scalar| over one period
    double base_period = 0;
    double monodromy_det = 0;  // det of the 4x4 fundamental matrix after one period
    double wronskian_drift = 0; // max |W(t) - W(0)| for two scalar solutions
    double base_energy_drift = 0;
    int steps = 0;
};

/// RK4 integration of the base orbit, the 4D variational flow, its
/// fundamental matrix and the scalar NVE side by side.
FlowOracleResult nve_flow_oracle(const VariationalSystem &vs, const ScalarNVE &nve, const FlowOracleOptions &opt = {});

/// Integrates the time-domain NVE along psi(t) and the normal form pulled
/// back along w(t) from matched data. The log-derivatives must differ by
/// p(w) w'/2; returns the largest violation on (0, t_end].
double gauge_check(const ScalarNVE &nve, const AlgebraizedODE &ode, double t_end = 0.7, int steps = 7000);

nlohmann::json to_json(const ScalarNVE &nve);
nlohmann::json to_json(const AlgebraizedODE &ode);
nlohmann::json to_json(const EllipticForm &e);

} // namespace dyson

#endif
