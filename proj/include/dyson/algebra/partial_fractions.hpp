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

#ifndef DYSON_ALGEBRA_PARTIAL_FRACTIONS_HPP
#define DYSON_ALGEBRA_PARTIAL_FRACTIONS_HPP

#include <utility>
#include <vector>

#include "dyson/algebra/rational_function.hpp"
#include "dyson/algebra/roots.hpp"
#include "dyson/algebra/series.hpp"

namespace dyson {

template <class T> struct PoleTerm {
    T pole;
    int order = 0;
    /// ladder[k] is the coefficient of (w - pole)^-(k+1).
    std::vector<T> ladder;
};

template <class T> struct PartialFractions {
    Poly<T> polynomial_part;
    std::vector<PoleTerm<T>> poles;
    int order_at_infinity = 0;
};

/// Laurent data of num/den at a point c where den has a zero of order nu:
/// coefficients of (w-c)^(-nu), (w-c)^(-nu+1), ... (n of them).
/// `roots` lists every root of den with its multiplicity.
template <class T>
std::vector<T> laurent_at_root(const Poly<T> &num, const Poly<T> &den, const std::vector<std::pair<T, int>> &roots,
                               std::size_t which, int n)
{
    // den = lead * prod (w - c_j)^m_j; the cofactor omits the chosen root.
    Poly<T> cof = Poly<T>::constant(den.leading());
    const T c = roots[which].first;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j == which) continue;
        cof = cof * pow(Poly<T>{-roots[j].first, ScalarTraits<T>::one()}, roots[j].second);
    }
    return series_div(series_from_poly(num.taylor_shift(c), n), series_from_poly(cof.taylor_shift(c), n), n);
}

/// Laurent coefficients of num/den at infinity in powers of 1/w, starting at
/// w^(deg num - deg den): n coefficients.
template <class T> std::vector<T> laurent_at_infinity(const Poly<T> &num, const Poly<T> &den, int n)
{
    if (num.is_zero()) return std::vector<T>(static_cast<std::size_t>(n), ScalarTraits<T>::zero());
    const auto a = series_from_poly(num.reversed(num.degree()), n);
    const auto b = series_from_poly(den.reversed(den.degree()), n);
    return series_div(a, b, n);
}

/// Decomposition num/den = polynomial + sum over poles of principal parts.
/// Requires the complete root list of den.
template <class T>
PartialFractions<T> partial_fractions(const Poly<T> &num, const Poly<T> &den, const std::vector<std::pair<T, int>> &roots)
{
    int total = 0;
    for (const auto &r : roots) total += r.second;
    if (total != den.degree()) throw ContractViolation("partial_fractions: root list does not match the denominator degree");
    PartialFractions<T> pf;
    pf.polynomial_part = divmod(num, den).first;
    pf.order_at_infinity = den.degree() - num.degree();
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const int nu = roots[j].second;
        auto lau = laurent_at_root(num, den, roots, j, nu);
        PoleTerm<T> term{roots[j].first, nu, {}};
        for (int k = 0; k < nu; ++k) term.ladder.push_back(lau[static_cast<std::size_t>(nu - 1 - k)]);
        pf.poles.push_back(std::move(term));
    }
    return pf;
}

/// Exact decomposition; every pole must be expressible in the field.
PartialFractions<FieldElement> partial_fractions(const RationalFunction &f);

/// Numeric decomposition of an exact function; `unreduced` input (common
/// factor between num and den) is rejected.
PartialFractions<mp::Complex> partial_fractions_numeric(const ExactPoly &num, const ExactPoly &den, mpfr_prec_t bits);

/// Evaluate a decomposition at w (used by the recombination check).
template <class T> T evaluate(const PartialFractions<T> &pf, const T &w)
{
    T acc = pf.polynomial_part(w);
    for (const auto &pt : pf.poles) {
        const T inv = ScalarTraits<T>::one() / (w - pt.pole);
        T pw = inv;
        for (const auto &c : pt.ladder) {
            acc += c * pw;
            pw = pw * inv;
        }
    }
    return acc;
}

} // namespace dyson

#endif
