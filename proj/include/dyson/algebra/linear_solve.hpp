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

#ifndef DYSON_ALGEBRA_LINEAR_SOLVE_HPP
#define DYSON_ALGEBRA_LINEAR_SOLVE_HPP

#include <optional>
#include <vector>

#include "dyson/algebra/poly.hpp"

namespace dyson {

template <class T> using Matrix = std::vector<std::vector<T>>;

template <class T> struct EchelonResult {
    int rank = 0;
    bool consistent = true;
    /// One solution with all free variables set to zero (when consistent).
    std::vector<T> solution;
};

/// Gauss-Jordan elimination on A x = b over an exact field.
template <class T> EchelonResult<T> solve_linear(Matrix<T> a, std::vector<T> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && detail::coeff_is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        const T inv = ScalarTraits<T>::one() / a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || detail::coeff_is_zero(a[i][c])) continue;
            const T f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    EchelonResult<T> out;
    out.rank = static_cast<int>(r);
    for (std::size_t i = r; i < rows; ++i) {
        if (!detail::coeff_is_zero(b[i])) out.consistent = false;
    }
    if (out.consistent) {
        out.solution.assign(cols, ScalarTraits<T>::zero());
        for (std::size_t i = 0; i < r; ++i) out.solution[pivot_col[i]] = b[i];
    }
    return out;
}

} // namespace dyson

#endif
