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

#ifndef DYSON_ALGEBRA_RATIONAL_HPP
#define DYSON_ALGEBRA_RATIONAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace dyson {

using Integer = mpz_class;
using Rational = mpq_class;

// Signals an attempt to invert or divide by an exact zero.
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when an operation's precondition is violated by its input.
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) throw DivisionByZero("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline std::string to_string(const Rational &q) { return q.get_str(); }

// Parses "p/q" or "p" into a canonical rational.
Rational parse_rational(const std::string &text);

// n = s^2 * k with k squarefree (sign carried by k). Returns nullopt when the
// cofactor left after trial division is too large to classify.
std::optional<std::pair<Integer, Integer>> squarefree_split(const Integer &n);

} // namespace dyson

#endif
