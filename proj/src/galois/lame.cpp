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

#include "dyson/galois/lame.hpp"

#include "dyson/io/exact_json.hpp"

namespace dyson {

namespace {

std::optional<Rational> rational_root(const Rational &x)
{
    if (x < 0) return std::nullopt;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational out(rn, rd);
    out.canonicalize();
    return out;
}


bool in_fraction_lattice(const Rational &x, long k)
{
    Rational y = x * k;
    y.canonicalize();
    return is_integer(y);
}

} // namespace

std::vector<LameIndex> lame_indices(const Rational &A)
{
    Rational disc = 1 + 4 * A;
    disc.canonicalize();
    const FieldElement half = FieldElement::rational(1, 2);
    const FieldElement s = FieldElement::sqrt_of(disc);
    const bool rat = rational_root(disc).has_value();
    std::vector<LameIndex> out;
    for (int sgn : {1, -1}) {
        const FieldElement n = -half + FieldElement(sgn) * half * s;
        out.push_back({n, rat, n.str()});
        if (disc == 0) break;
    }
    return out;
}

LameSieve lame_sieve(const LameParams &lp)
{
    LameSieve s;
    s.params = lp;
    s.indices = lame_indices(lp.A);
    for (const auto &idx : s.indices) {
        if (!idx.rational) continue;
        const Rational n = *idx.n.as_rational();
        Rational m = n + Rational(1, 2);
        m.canonicalize();
        if (is_integer(n)) s.lame_hermite = true;
        if (is_integer(m) && m >= 1) s.brioschi_halphen_crawford = true;
        if (!is_integer(m) && (in_fraction_lattice(m, 3) || in_fraction_lattice(m, 4) || in_fraction_lattice(m, 5)))
            s.baldassarri = true;
        if (!is_integer(m) && in_fraction_lattice(m, 3) && in_fraction_lattice(m, 4) && in_fraction_lattice(m, 5))
            s.baldassarri_intersection_form = true;
    }
    return s;
}

nlohmann::json to_json(const LameSieve &s)
{
    nlohmann::json idx = nlohmann::json::array();
    for (const auto &i : s.indices) idx.push_back({{"n", to_json(i.n)}, {"rational", i.rational}});
    return {{"A", to_json(s.params.A)},
            {"B", to_json(s.params.B)},
            {"g2", to_json(s.params.g2)},
            {"g3", to_json(s.params.g3)},
            {"indices", idx},
            {"lame_hermite", s.lame_hermite},
            {"brioschi_halphen_crawford", s.brioschi_halphen_crawford},
            {"baldassarri", s.baldassarri},
            {"baldassarri_intersection_form", s.baldassarri_intersection_form},
            {"set_operation_note", "union form used; the intersection form (Z/3 n Z/4 n Z/5) - Z is empty"},
            {"non_commutative", s.non_commutative()}};
}

} // namespace dyson
