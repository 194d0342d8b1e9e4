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

#ifndef DYSON_DYNAMICS_WEIERSTRASS_HPP
#define DYSON_DYNAMICS_WEIERSTRASS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "dyson/algebra/mpfloat.hpp"
#include "dyson/algebra/rational.hpp"

namespace dyson {

/// The argument sits on (or numerically at) a lattice point.
struct LatticePointProximity : std::domain_error {
    using std::domain_error::domain_error;
};

struct EllipticInvariants {
    Rational g2, g3;
    /// g2^3 - 27 g3^2
    Rational discriminant() const;
};

struct WpValue {
    mp::Complex p, dp; // wp and wp'
};

/// wp(t) and wp'(t). The argument is halved until |t| <= 2^-12, the Laurent
/// series through t^10 is summed there, and the duplication formula brings
/// it back. Works in `bits` plus guard bits; results rounded to `bits`.
WpValue weierstrass_p(const mp::Complex &t, const EllipticInvariants &inv, mpfr_prec_t bits = 128);

/// One application of the duplication formula: (wp, wp') at t -> at 2t.
WpValue wp_duplicate(const WpValue &v, const EllipticInvariants &inv);

/// |wp'^2 - (4 wp^3 - g2 wp - g3)|
mp::Float wp_ode_residual(const WpValue &v, const EllipticInvariants &inv);

/// Laurent coefficients c_2..c_n of wp = t^-2 + sum c_k t^(2k-2).
std::vector<Rational> wp_laurent_coefficients(const EllipticInvariants &inv, int n);

} // namespace dyson

#endif
