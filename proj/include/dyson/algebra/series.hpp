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

#ifndef DYSON_ALGEBRA_SERIES_HPP
#define DYSON_ALGEBRA_SERIES_HPP

#include <optional>
#include <vector>

#include "dyson/algebra/multipoly.hpp"
#include "dyson/algebra/poly.hpp"

namespace dyson {

// Truncated univariate power series are plain coefficient vectors, low
// order first; every routine returns exactly n coefficients.

template <class T> std::vector<T> series_from_poly(const Poly<T> &p, int n)
{
    std::vector<T> s(static_cast<std::size_t>(n), ScalarTraits<T>::zero());
    for (int k = 0; k < n && k <= p.degree(); ++k) s[static_cast<std::size_t>(k)] = p.coeffs()[static_cast<std::size_t>(k)];
    return s;
}

template <class T> std::vector<T> series_mul(const std::vector<T> &a, const std::vector<T> &b, int n)
{
    std::vector<T> out(static_cast<std::size_t>(n), ScalarTraits<T>::zero());
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// a / b; b[0] must be invertible.
template <class T> std::vector<T> series_div(const std::vector<T> &a, const std::vector<T> &b, int n)
{
    if (b.empty() || detail::coeff_is_zero(b[0])) throw DivisionByZero("series_div: constant term is zero");
    const T inv = ScalarTraits<T>::one() / b[0];
    std::vector<T> q(static_cast<std::size_t>(n), ScalarTraits<T>::zero());
    for (std::size_t k = 0; k < q.size(); ++k) {
        T acc = k < a.size() ? a[k] : ScalarTraits<T>::zero();
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
        q[k] = acc * inv;
    }
    return q;
}

/// Square root with the given choice of sqrt(a[0]).
template <class T> std::vector<T> series_sqrt(const std::vector<T> &a, const T &root0, int n)
{
    if (detail::coeff_is_zero(root0)) throw DivisionByZero("series_sqrt: zero constant term");
    const T two_inv = ScalarTraits<T>::one() / (root0 + root0);
    std::vector<T> s(static_cast<std::size_t>(n), ScalarTraits<T>::zero());
    if (n == 0) return s;
    s[0] = root0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        T acc = k < a.size() ? a[k] : ScalarTraits<T>::zero();
        for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
        s[k] = acc * two_inv;
    }
    return s;
}

// Multivariate series used by the Taylor truncation. The argument must have
// no constant term; the result is truncated at the argument's cutoff.
MultiPoly series_sin(const MultiPoly &u);
MultiPoly series_cos(const MultiPoly &u);
MultiPoly series_log1p(const MultiPoly &s);

} // namespace dyson

#endif
