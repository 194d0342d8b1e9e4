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

#include "dyson/algebra/series.hpp"

namespace dyson {

namespace {

void require_no_constant(const MultiPoly &u, const char *who)
{
    if (!u.coefficient({0, 0, 0, 0}).is_zero()) throw ContractViolation(std::string(who) + ": argument has a constant term");
}

// sum_k coeff(k) u^k for k = 0..cutoff
template <class F> MultiPoly power_sum(const MultiPoly &u, F coeff)
{
    MultiPoly acc(u.cutoff());
    MultiPoly pw = MultiPoly::constant(FieldElement(1), u.cutoff());
    for (int k = 0; k <= u.cutoff(); ++k) {
        const Rational c = coeff(k);
        if (c != 0) acc += pw * FieldElement(c);
        pw = pw * u;
    }
    return acc;
}

Rational inv_factorial(int k)
{
    Integer f = 1;
    for (int j = 2; j <= k; ++j) f *= j;
    return Rational(1, 1) / Rational(f);
}

} // namespace

MultiPoly series_sin(const MultiPoly &u)
{
    require_no_constant(u, "series_sin");
    return power_sum(u, [](int k) {
        if (k % 2 == 0) return Rational(0);
        return (k / 2) % 2 == 0 ? inv_factorial(k) : Rational(-inv_factorial(k));
    });
}

MultiPoly series_cos(const MultiPoly &u)
{
    require_no_constant(u, "series_cos");
    return power_sum(u, [](int k) {
        if (k % 2 == 1) return Rational(0);
        return (k / 2) % 2 == 0 ? inv_factorial(k) : Rational(-inv_factorial(k));
    });
}

MultiPoly series_log1p(const MultiPoly &s)
{
    require_no_constant(s, "series_log1p");
    return power_sum(s, [](int k) {
        if (k == 0) return Rational(0);
        return Rational(k % 2 == 1 ? 1 : -1, k);
    });
}

} // namespace dyson
