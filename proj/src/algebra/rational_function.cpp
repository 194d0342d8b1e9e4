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

#include "dyson/algebra/rational_function.hpp"

namespace dyson {

RationalFunction::RationalFunction(ExactPoly num, ExactPoly den)
{
    if (den.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
    if (num.is_zero()) {
        den_ = ExactPoly::constant(1);
        return;
    }
    ExactPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    const FieldElement inv = FieldElement(1) / den.leading();
    num_ = num * inv;
    den_ = den * inv;
}

int RationalFunction::order_at_infinity() const
{
    if (is_zero()) throw ContractViolation("order_at_infinity: zero function");
    return den_.degree() - num_.degree();
}

FieldElement RationalFunction::operator()(const FieldElement &w) const
{
    const FieldElement d = den_(w);
    if (d.is_zero()) throw DivisionByZero("RationalFunction: evaluation at a pole");
    return num_(w) / d;
}

RationalFunction RationalFunction::derivative() const
{
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &o)
{
    if (den_ == o.den_) {
        *this = RationalFunction(num_ + o.num_, den_);
    } else {
        *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &o) { return *this += -o; }

RationalFunction &RationalFunction::operator*=(const RationalFunction &o)
{
    *this = RationalFunction(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &o)
{
    if (o.is_zero()) throw DivisionByZero("RationalFunction: division by zero function");
    *this = RationalFunction(num_ * o.den_, den_ * o.num_);
    return *this;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::shifted(const FieldElement &shift) const
{
    return {num_.taylor_shift(shift), den_.taylor_shift(shift)};
}

std::string RationalFunction::str(const std::string &var) const
{
    if (is_polynomial()) return to_string(num_, var);
    return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
}

std::ostream &operator<<(std::ostream &os, const RationalFunction &f) { return os << f.str(); }

} // namespace dyson
