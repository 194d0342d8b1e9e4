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

#include "dyson/algebra/modp.hpp"

#include <gmpxx.h>

namespace dyson {

namespace modp_detail {

std::uint64_t &current_modulus()
{
    thread_local std::uint64_t p = 0;
    return p;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % current_modulus());
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1 % current_modulus();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

} // namespace modp_detail

ModP::ModP(long v)
{
    const auto p = static_cast<long long>(modp_detail::current_modulus());
    long long r = static_cast<long long>(v) % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
}

ModP &ModP::operator+=(const ModP &o)
{
    const std::uint64_t p = modp_detail::current_modulus();
    v_ += o.v_;
    if (v_ >= p) v_ -= p;
    return *this;
}

ModP &ModP::operator-=(const ModP &o)
{
    const std::uint64_t p = modp_detail::current_modulus();
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
    return *this;
}

ModP ModP::operator-() const { return raw(v_ == 0 ? 0 : modp_detail::current_modulus() - v_); }

ModP operator/(const ModP &a, const ModP &b)
{
    if (b.v_ == 0) throw DivisionByZero("ModP: division by zero");
    return a * ModP::raw(modp_detail::pow(b.v_, modp_detail::current_modulus() - 2));
}

// Tonelli-Shanks; requires a to be a nonzero quadratic residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p)
{
    ModScope scope(p);
    using modp_detail::mul;
    using modp_detail::pow;
    a %= p;
    if (a == 0) return 0;
    if (pow(a, (p - 1) / 2) != 1) throw NotReducible("sqrt_mod: not a quadratic residue");
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow(z, (p - 1) / 2) != p - 1) ++z;
    std::uint64_t m = static_cast<std::uint64_t>(s);
    std::uint64_t c = pow(z, q);
    std::uint64_t t = pow(a, q);
    std::uint64_t r = pow(a, (q + 1) / 2);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = mul(tt, tt);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

PrimeEmbedding PrimeEmbedding::choose(const std::vector<FieldElement::Radicand> &generators, std::uint64_t below)
{
    mpz_class cand(std::to_string(below));
    for (;;) {
        do {
            cand -= 1;
        } while (mpz_probab_prime_p(cand.get_mpz_t(), 30) == 0);
        const std::uint64_t p = std::stoull(cand.get_str());
        ModScope scope(p);
        PrimeEmbedding emb;
        emb.p_ = p;
        bool ok = true;
        for (auto g : generators) {
            const std::uint64_t a = g < 0 ? p - 1 : static_cast<std::uint64_t>(g) % p;
            if (a == 0 || modp_detail::pow(a, (p - 1) / 2) != 1) {
                ok = false;
                break;
            }
            emb.roots_[g] = sqrt_mod(a, p);
        }
        if (ok) return emb;
    }
}

ModP PrimeEmbedding::reduce(const Rational &q) const
{
    auto to_mod = [this](const mpz_class &z) {
        mpz_class r;
        mpz_class pz(std::to_string(p_));
        mpz_mod(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
        return ModP::raw(std::stoull(r.get_str()));
    };
    const ModP den = to_mod(q.get_den());
    if (is_zero(den)) throw NotReducible("PrimeEmbedding: denominator divisible by p");
    return to_mod(q.get_num()) / den;
}

ModP PrimeEmbedding::reduce(const FieldElement &x) const
{
    ModP acc;
    for (const auto &[m, c] : x.terms()) {
        ModP root = ModP::raw(1);
        if (m < 0) {
            auto it = roots_.find(-1);
            if (it == roots_.end()) throw NotReducible("PrimeEmbedding: i not registered");
            root = ModP::raw(it->second);
        }
        FieldElement::Radicand n = m < 0 ? -m : m;
        for (FieldElement::Radicand f = 2; f * f <= n; ++f) {
            if (n % f != 0) continue;
            auto it = roots_.find(f);
            if (it == roots_.end()) throw NotReducible("PrimeEmbedding: radicand prime not registered");
            root = root * ModP::raw(it->second);
            n /= f;
        }
        if (n > 1) {
            auto it = roots_.find(n);
            if (it == roots_.end()) throw NotReducible("PrimeEmbedding: radicand prime not registered");
            root = root * ModP::raw(it->second);
        }
        acc += reduce(c) * root;
    }
    return acc;
}

} // namespace dyson
