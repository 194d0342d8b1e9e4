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

#include "dyson/io/exact_json.hpp"

namespace dyson {

using nlohmann::json;

json to_json(const Rational &q) { return q.get_str(); }

json to_json(const FieldElement &x)
{
    json j;
    if (x.in_tower()) {
        json coords = json::array();
        for (const auto &c : x.tower_coords()) coords.push_back(to_json(c));
        j["tower"] = coords;
    } else {
        json terms = json::array();
        for (const auto &[m, c] : x.terms()) terms.push_back(json::array({m, to_json(c)}));
        j["terms"] = terms;
    }
    j["text"] = x.str();
    return j;
}

json to_json(const ExactPoly &p)
{
    json a = json::array();
    for (const auto &c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

json to_json(const RationalFunction &f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Rational rational_from_json(const json &j)
{
    if (!j.is_string()) throw ContractViolation("rational_from_json: expected a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

FieldElement field_from_json(const json &j)
{
    if (j.contains("tower")) {
        const auto &t = j.at("tower");
        if (!t.is_array() || t.size() != 8) throw ContractViolation("field_from_json: tower needs 8 coordinates");
        std::array<Rational, 8> c;
        for (std::size_t k = 0; k < 8; ++k) c[k] = rational_from_json(t[k]);
        return FieldElement::from_tower_coords(c);
    }
    if (j.contains("terms")) {
        FieldElement x;
        for (const auto &t : j.at("terms")) x += FieldElement::term(t.at(0).get<FieldElement::Radicand>(), rational_from_json(t.at(1)));
        return x;
    }
    throw ContractViolation("field_from_json: neither tower nor terms present");
}

ExactPoly poly_from_json(const json &j)
{
    if (!j.is_array()) throw ContractViolation("poly_from_json: expected an array");
    std::vector<FieldElement> c;
    for (const auto &e : j) c.push_back(field_from_json(e));
    return ExactPoly(c);
}

RationalFunction rational_function_from_json(const json &j)
{
    return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

} // namespace dyson
