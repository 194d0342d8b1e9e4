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

#ifndef DYSON_DYNAMICS_MONODROMY_HPP
#define DYSON_DYNAMICS_MONODROMY_HPP

#include <complex>
#include <string>

namespace dyson {

using cplx = std::complex<double>;

/// Analytic continuation of the closed-form turning-point data along the
/// circle center + radius e^{i theta}, traversed `loops` times.
///
/// Tracked by nearest-value continuation:
///  - s, the inner radical sqrt(27 c^4 - 256 c^6) of the cubic formula;
///  - u, the cube root it feeds, and B built from s and u;
///  - rho = sqrt(2 - B + 2/sqrt(1+B)), which separates r1 from r2;
///  - eta = eps * delta, whose argument is accumulated to give the
///    winding of log eta.
struct MonodromyResult {
    cplx c_start;
    cplx B_before, B_after;
    cplx radical_before, radical_after;
    /// The inner square root came back with the opposite sign.
    bool branch_changed = false;
    /// r1 and r2 were exchanged by the loop.
    bool roots_swapped = false;
    /// Change of Im log eta divided by 2 pi.
    double log_eta_winding = 0;
    /// Smallest (candidate separation) / (step movement) seen; must stay >= 3.
    double min_guard_ratio = 0;
    bool ok = true;
    std::string error;
};

MonodromyResult eta_monodromy(cplx center, double radius, int steps, int loops = 1);
/// Loop around c* = 3 sqrt3/16.
MonodromyResult eta_monodromy(double radius, int steps, int loops = 1);

} // namespace dyson

#endif
