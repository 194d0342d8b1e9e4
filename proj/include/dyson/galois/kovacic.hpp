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

#ifndef DYSON_GALOIS_KOVACIC_HPP
#define DYSON_GALOIS_KOVACIC_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dyson/algebra/rational_function.hpp"

namespace dyson {

struct PoleInfo {
    /// Exact location when the denominator factor splits in the field.
    std::optional<FieldElement> location;
    std::complex<double> approx;
    int order = 0;
};

struct PoleProfile {
    std::vector<PoleInfo> poles;
    /// deg den - deg num. Meaningless when r = 0, which counts as "> 2".
    int order_at_infinity = 0;
    bool r_is_zero = false;
    /// Every pole location is exact.
    bool exact = true;

    bool infinity_above(int k) const { return r_is_zero || order_at_infinity > k; }
    /// Kovacic's necessary conditions for the three cases.
    bool case1_possible() const;
    bool case2_possible() const;
    bool case3_possible() const;
};

/// Orders from the square-free factorization of the denominator (always
/// exact); locations from exact roots, numeric where a factor does not split.
PoleProfile pole_profile(const RationalFunction &r);

enum class KovacicOutcome { case1, case2, case3, not_liouvillian, indeterminate };
std::string to_string(KovacicOutcome o);

struct KovacicCertificate {
    int kovacic_case = 0;
    /// 1 for case 1, 2 for case 2, 4/6/12 for case 3.
    int n = 1;
    int degree = 0;
    /// Case 1: omega with xi = P exp(int omega). Cases 2, 3: theta.
    RationalFunction omega;
    ExactPoly P;
    /// Exponent choice per pole (then infinity), as text.
    std::vector<std::string> family;
    /// Exact re-substitution: the Riccati equation u' + u^2 = r for
    /// u = omega + P'/P (case 1), the second symmetric power Riccati equation
    /// for phi = theta + P'/P (case 2), P_{-1} = 0 (case 3).
    bool verified = false;
};

struct KovacicOptions {
    /// Collect every case-1 family that succeeds instead of stopping at the first.
    bool all_case1 = true;
    /// Rule out case-3 candidates by a certified rank test modulo a prime first.
    bool modular_filter = true;
    int max_degree = 400;
};

struct KovacicVerdict {
    KovacicOutcome outcome = KovacicOutcome::indeterminate;
    PoleProfile profile;
    std::vector<KovacicCertificate> certificates;
    std::vector<std::string> log;
    std::string indeterminate_reason;
    bool liouvillian() const
    {
        return outcome == KovacicOutcome::case1 || outcome == KovacicOutcome::case2 || outcome == KovacicOutcome::case3;
    }
};

/// Kovacic's algorithm for xi'' = r xi. NotLiouvillian means the identity
/// component of the differential Galois group is SL(2, C).
KovacicVerdict kovacic(const RationalFunction &r, const KovacicOptions &opt = {});

nlohmann::json to_json(const PoleProfile &p);
nlohmann::json to_json(const KovacicVerdict &v);

} // namespace dyson

#endif
