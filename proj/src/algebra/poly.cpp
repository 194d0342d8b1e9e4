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

#include "dyson/algebra/poly.hpp"

#include <sstream>

namespace dyson {

std::vector<std::pair<ExactPoly, int>> squarefree_factor(const ExactPoly &p)
{
    if (p.is_zero()) throw ContractViolation("squarefree_factor: zero polynomial");
    std::vector<std::pair<ExactPoly, int>> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm over a field of characteristic zero.
    const ExactPoly dp = p.derivative();
    ExactPoly a = gcd(p, dp);
    ExactPoly b = exact_div(p, a);
    ExactPoly c = exact_div(dp, a);
    ExactPoly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        ExactPoly f = gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f.monic(), mult);
        b = exact_div(b, f);
        c = exact_div(d, f);
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

std::string to_string(const ExactPoly &p, const std::string &var)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const FieldElement &c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool simple = c.terms().size() == 1;
        std::string cs = simple ? c.str() : "(" + c.str() + ")";
        if (k == 0) {
            os << cs;
        } else {
            if (c != FieldElement(1)) os << cs << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const ExactPoly &p) { return os << to_string(p); }

} // namespace dyson
