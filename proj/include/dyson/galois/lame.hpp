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

#ifndef DYSON_GALOIS_LAME_HPP
#define DYSON_GALOIS_LAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dyson/algebra/field.hpp"

namespace dyson {

/// xi'' = (A wp + B) xi with invariants g2, g3.
struct LameParams {
    Rational A, B;
    Rational g2, g3;
};

/// A root of n(n+1) = A: exact when 1 + 4A is a rational square.
struct LameIndex {
    FieldElement n;
    bool rational = false;
    std::string text;
};

/// Both roots (one when 1 + 4A = 0).
std::vector<LameIndex> lame_indices(const Rational &A);

struct LameSieve {
    LameParams params;
    std::vector<LameIndex> indices;
    /// Some n is an integer.
    bool lame_hermite = false;
    /// Some n + 1/2 lies in {1, 2, 3, ...}.
    bool brioschi_halphen_crawford = false;
    /// Some n + 1/2 lies in (Z/3 u Z/4 u Z/5) minus Z.
    bool baldassarri = false;
    /// The same with intersections; that set is empty, so this is always false.
    bool baldassarri_intersection_form = false;
    /// Every family fails: the identity component is not commutative.
    bool non_commutative() const { return !lame_hermite && !brioschi_halphen_crawford && !baldassarri; }
};

/// Necessary conditions only. Depends on A alone.
LameSieve lame_sieve(const LameParams &lp);

nlohmann::json to_json(const LameSieve &s);

} // namespace dyson

#endif
