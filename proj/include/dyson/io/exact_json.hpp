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

#ifndef DYSON_IO_EXACT_JSON_HPP
#define DYSON_IO_EXACT_JSON_HPP

#include "json.hpp"

#include "dyson/algebra/rational_function.hpp"

namespace dyson {

/// Exact values as JSON. Rationals are "p/q" strings. A field element in
/// Q(sqrt3, sqrt26, i) is {"tower": [8 rationals]} over the basis
/// {1, sqrt3, sqrt26, sqrt78, i, i sqrt3, i sqrt26, i sqrt78}; anything else
/// is {"terms": [[radicand, rational], ...]}. Both carry a "text" rendering.
nlohmann::json to_json(const Rational &q);
nlohmann::json to_json(const FieldElement &x);
/// Coefficient list, constant term first.
nlohmann::json to_json(const ExactPoly &p);
nlohmann::json to_json(const RationalFunction &f);

Rational rational_from_json(const nlohmann::json &j);
FieldElement field_from_json(const nlohmann::json &j);
ExactPoly poly_from_json(const nlohmann::json &j);
RationalFunction rational_function_from_json(const nlohmann::json &j);

} // namespace dyson

#endif
