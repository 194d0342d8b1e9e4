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

#include "dyson/algebra/partial_fractions.hpp"

namespace dyson {

PartialFractions<FieldElement> partial_fractions(const RationalFunction &f)
{
    std::vector<std::pair<FieldElement, int>> roots;
    if (f.den().degree() > 0) {
        const auto er = exact_roots(f.den());
        if (!er.complete) throw ContractViolation("partial_fractions: denominator does not split over the field");
        for (const auto &r : er.roots) roots.emplace_back(r.value, r.multiplicity);
    }
    return partial_fractions(f.num(), f.den(), roots);
}

PartialFractions<mp::Complex> partial_fractions_numeric(const ExactPoly &num, const ExactPoly &den, mpfr_prec_t bits)
{
    if (den.is_zero()) throw DivisionByZero("partial_fractions_numeric: zero denominator");
    if (gcd(num, den).degree() > 0) throw ContractViolation("partial_fractions_numeric: input is not reduced");
    std::vector<std::pair<mp::Complex, int>> roots;
    if (den.degree() > 0) {
        for (auto &r : poly_complex_roots(den, bits)) roots.emplace_back(std::move(r.value), r.multiplicity);
    }
    return partial_fractions(to_complex_poly(num, bits), to_complex_poly(den, bits), roots);
}

} // namespace dyson
