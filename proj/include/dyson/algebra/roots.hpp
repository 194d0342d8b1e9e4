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

#ifndef DYSON_ALGEBRA_ROOTS_HPP
#define DYSON_ALGEBRA_ROOTS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dyson/algebra/poly.hpp"

namespace dyson {

using ComplexPoly = Poly<mp::Complex>;

struct RootNotConverged : std::runtime_error {
    RootNotConverged(const std::string &what, double residual)
        : std::runtime_error(what), achieved_residual(residual) {}
    double achieved_residual;
};

struct NumericRoot {
    mp::Complex value;
    int multiplicity = 1;
    /// |p(root)| / sum |a_k| |root|^k for the square-free factor it came from.
    double relative_residual = 0.0;
};

struct ExactRoot {
    FieldElement value;
    int multiplicity = 1;
};

ComplexPoly to_complex_poly(const ExactPoly &p, mpfr_prec_t bits);

/// Roots of a square-free numeric polynomial by Aberth iteration followed by
/// Newton polishing. Every root is reported with multiplicity 1.
std::vector<NumericRoot> aberth_roots(const ComplexPoly &p, mpfr_prec_t bits);

/// All complex roots with multiplicities: exact square-free decomposition
/// first, then Aberth on each factor. Multiplicities sum to deg p.
std::vector<NumericRoot> poly_complex_roots(const ExactPoly &p, mpfr_prec_t bits = 128);

/// Roots that can be written down in the field: linear and quadratic
/// square-free factors, plus rational roots peeled off higher factors with
/// rational coefficients. `complete` tells whether every root was found.
struct ExactRootResult {
    std::vector<ExactRoot> roots;
    bool complete = false;
};
ExactRootResult exact_roots(const ExactPoly &p);

} // namespace dyson

#endif
