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

#include "dyson/algebra/rational.hpp"

namespace dyson {

Rational parse_rational(const std::string &text)
{
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + text + "'");
    if (q.get_den() == 0) throw DivisionByZero("parse_rational: zero denominator");
    q.canonicalize();
    return q;
}

std::optional<std::pair<Integer, Integer>> squarefree_split(const Integer &n)
{
    if (n == 0) return std::pair<Integer, Integer>{0, 1};
    Integer rest = abs(n);
    Integer square = 1;
    Integer kernel = n < 0 ? -1 : 1;

    constexpr unsigned long trial_limit = 1000000;
    bool rest_is_prime = false;
    for (unsigned long p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > rest) {
            rest_is_prime = true;
            break;
        }
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
        int mult = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            rest /= p;
            ++mult;
        }
        for (int i = 0; i + 1 < mult; i += 2) square *= p;
        if (mult % 2 == 1) kernel *= p;
    }
    if (rest > 1 && rest_is_prime) {
        kernel *= rest;
    } else if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
            Integer root;
            mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
            square *= root;
        } else {
            // With no factor below the trial limit, a cofactor below limit^3
            // has at most two prime factors, so it is squarefree here.
            Integer bound = Integer(trial_limit) * trial_limit * trial_limit;
            if (rest >= bound) return std::nullopt;
            kernel *= rest;
        }
    }
    return std::pair<Integer, Integer>{square, kernel};
}

} // namespace dyson
