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

#include "dyson/algebra/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace dyson {

namespace {

const char *const var_names[4] = {"q1", "q2", "p1", "p2"};

template <class S> S power(S base, int k)
{
    S r = S(1);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

} // namespace

MultiPoly MultiPoly::constant(const FieldElement &c, int cutoff)
{
    MultiPoly p(cutoff);
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v, int cutoff)
{
    MultiPoly p(cutoff);
    Exponent e{0, 0, 0, 0};
    e[static_cast<int>(v)] = 1;
    p.add_term(e, FieldElement(1));
    return p;
}

FieldElement MultiPoly::coefficient(const Exponent &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement() : it->second;
}

void MultiPoly::add_term(const Exponent &e, const FieldElement &c)
{
    if (c.is_zero() || total_degree(e) > cutoff_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::homogeneous_part(int degree) const
{
    MultiPoly r(cutoff_);
    for (const auto &[e, c] : terms_) {
        if (total_degree(e) == degree) r.terms_.emplace(e, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const
{
    const int k = static_cast<int>(v);
    MultiPoly r(cutoff_);
    for (const auto &[e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponent d = e;
        d[k] -= 1;
        r.add_term(d, c * FieldElement(e[k]));
    }
    return r;
}

MultiPoly MultiPoly::swapped() const
{
    MultiPoly r(cutoff_);
    for (const auto &[e, c] : terms_) r.add_term({e[1], e[0], e[3], e[2]}, c);
    return r;
}

std::complex<double> MultiPoly::evaluate(const std::array<std::complex<double>, 4> &x) const
{
    std::complex<double> acc = 0;
    for (const auto &[e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int k = 0; k < 4; ++k) t *= power(x[static_cast<std::size_t>(k)], e[static_cast<std::size_t>(k)]);
        acc += t;
    }
    return acc;
}

double MultiPoly::evaluate(const std::array<double, 4> &x) const
{
    std::array<std::complex<double>, 4> z;
    for (std::size_t k = 0; k < 4; ++k) z[k] = x[k];
    return evaluate(z).real();
}

FieldElement MultiPoly::evaluate(const std::array<FieldElement, 4> &x) const
{
    FieldElement acc;
    for (const auto &[e, c] : terms_) {
        FieldElement t = c;
        for (std::size_t k = 0; k < 4; ++k) t *= power(x[k], e[k]);
        acc += t;
    }
    return acc;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    cutoff_ = std::min(cutoff_, o.cutoff_);
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = total_degree(it->first) > cutoff_ ? terms_.erase(it) : std::next(it);
    }
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(*this);
    for (auto &[e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly r(std::min(a.cutoff_, b.cutoff_));
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(MultiPoly a, const FieldElement &s)
{
    MultiPoly r(a.cutoff_);
    for (const auto &[e, c] : a.terms_) r.add_term(e, c * s);
    return r;
}

MultiPoly pow(const MultiPoly &p, int k)
{
    MultiPoly r = MultiPoly::constant(FieldElement(1), p.cutoff());
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

std::string MultiPoly::str() const
{
    if (terms_.empty()) return "0";
    // Highest total degree first, then the map order inside a degree.
    std::vector<std::pair<Exponent, FieldElement>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto &l, const auto &r) { return total_degree(l.first) < total_degree(r.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : sorted) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t k = 0; k < 4; ++k) {
            if (e[k] == 0) continue;
            os << "*" << var_names[k];
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

} // namespace dyson
