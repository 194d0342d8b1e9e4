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

#ifndef DYSON_ALGEBRA_MODP_HPP
#define DYSON_ALGEBRA_MODP_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "dyson/algebra/field.hpp"

namespace dyson {

namespace modp_detail {
std::uint64_t &current_modulus();
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
} // namespace modp_detail

/// Element of F_p for the modulus of the innermost active ModScope.
class ModP {
public:
    ModP() = default;
    ModP(long v);
    static ModP raw(std::uint64_t v)
    {
        ModP r;
        r.v_ = v;
        return r;
    }
    std::uint64_t value() const { return v_; }

    ModP &operator+=(const ModP &o);
    ModP &operator-=(const ModP &o);
    ModP operator-() const;
    friend ModP operator+(ModP a, const ModP &b) { return a += b; }
    friend ModP operator-(ModP a, const ModP &b) { return a -= b; }
    friend ModP operator*(const ModP &a, const ModP &b) { return raw(modp_detail::mul(a.v_, b.v_)); }
    friend ModP operator/(const ModP &a, const ModP &b);
    friend bool operator==(const ModP &a, const ModP &b) { return a.v_ == b.v_; }
    friend bool operator!=(const ModP &a, const ModP &b) { return a.v_ != b.v_; }

private:
    std::uint64_t v_ = 0;
};

inline bool is_zero(const ModP &x) { return x.value() == 0; }

/// Sets the modulus for ModP arithmetic on this thread for its lifetime.
class ModScope {
public:
    explicit ModScope(std::uint64_t p) : saved_(modp_detail::current_modulus()) { modp_detail::current_modulus() = p; }
    ~ModScope() { modp_detail::current_modulus() = saved_; }
    ModScope(const ModScope &) = delete;
    ModScope &operator=(const ModScope &) = delete;

private:
    std::uint64_t saved_;
};

struct NotReducible : std::domain_error {
    using std::domain_error::domain_error;
};

/// A prime p with a ring map from the field elements involved into F_p:
/// every generator (prime radicand, or -1 for i) is sent to a fixed square
/// root mod p. Products of radicands map consistently.
class PrimeEmbedding {
public:
    /// Largest suitable prime below `below` for which every generator has a
    /// square root mod p.
    static PrimeEmbedding choose(const std::vector<FieldElement::Radicand> &generators,
                                 std::uint64_t below = (std::uint64_t{1} << 61));

    std::uint64_t prime() const { return p_; }
    /// Throws NotReducible when a denominator vanishes mod p or a radicand
    /// has an unregistered prime factor. Requires an active ModScope(prime()).
    ModP reduce(const FieldElement &x) const;
    ModP reduce(const Rational &q) const;

private:
    std::uint64_t p_ = 0;
    std::map<FieldElement::Radicand, std::uint64_t> roots_;
};

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

} // namespace dyson

#endif
