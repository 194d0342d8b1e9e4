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

#include "dyson/galois/kovacic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "dyson/algebra/linear_solve.hpp"
#include "dyson/algebra/modp.hpp"
#include "dyson/algebra/partial_fractions.hpp"
#include "dyson/algebra/roots.hpp"
#include "dyson/io/exact_json.hpp"

namespace dyson {

namespace {

using RF = RationalFunction;

ExactPoly linear(const FieldElement &c) { return ExactPoly{-c, FieldElement(1)}; } // w - c
ExactPoly constant(const FieldElement &c) { return ExactPoly::constant(c); }

// Nonnegative integer value of an exact quantity, if it is one.
std::optional<long> nonneg_integer(const FieldElement &x)
{
    const auto q = x.as_rational();
    if (!q || q->get_den() != 1 || q->get_num() < 0 || !q->get_num().fits_slong_p()) return std::nullopt;
    return q->get_num().get_si();
}

// Rational square root of a rational, if it exists.
std::optional<Rational> rational_sqrt(const FieldElement &x)
{
    const auto q = x.as_rational();
    if (!q || *q < 0) return std::nullopt;
    mpz_class n = q->get_num(), d = q->get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational out(rn, rd);
    out.canonicalize();
    return out;
}

struct Indeterminate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field square root or Indeterminate.
FieldElement field_sqrt(const FieldElement &x, const std::string &what)
{
    if (const auto q = x.as_rational()) return FieldElement::sqrt_of(*q);
    const auto s = x.sqrt();
    if (!s) throw Indeterminate("square root of " + x.str() + " (" + what + ") is not available in the coefficient field");
    return *s;
}

struct ExactPole {
    FieldElement c;
    int order;
};

// Monic P of degree d solving sum_k ops[k] P^(k) = 0; ops are rational functions.
std::optional<ExactPoly> solve_monic(const std::vector<RF> &ops, int d, std::string &dims)
{
    ExactPoly M = constant(FieldElement(1));
    for (const auto &op : ops) {
        if (op.is_zero()) continue;
        M = exact_div(M * op.den(), gcd(M, op.den()));
    }
    std::vector<ExactPoly> coef;
    for (const auto &op : ops) coef.push_back(op.is_zero() ? ExactPoly() : op.num() * exact_div(M, op.den()));
    auto apply = [&](const ExactPoly &p) {
        ExactPoly acc;
        ExactPoly der = p;
        for (const auto &c : coef) {
            acc += c * der;
            der = der.derivative();
        }
        return acc;
    };
    std::vector<ExactPoly> cols;
    for (int j = 0; j <= d; ++j) cols.push_back(apply(ExactPoly::monomial(FieldElement(1), j)));
    int rows = 0;
    for (const auto &c : cols) rows = std::max(rows, c.degree() + 1);
    Matrix<FieldElement> A(static_cast<std::size_t>(rows), std::vector<FieldElement>(static_cast<std::size_t>(d)));
    std::vector<FieldElement> b(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < d; ++j) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)].coeff(i);
        b[static_cast<std::size_t>(i)] = -cols[static_cast<std::size_t>(d)].coeff(i);
    }
    dims = std::to_string(rows) + "x" + std::to_string(d);
    const auto res = solve_linear(A, b);
    if (!res.consistent) return std::nullopt;
    std::vector<FieldElement> pc(res.solution.begin(), res.solution.end());
    pc.resize(static_cast<std::size_t>(d));
    pc.push_back(FieldElement(1));
    return ExactPoly(pc);
}

std::string fe(const FieldElement &x) { return x.str(); }

} // namespace

bool PoleProfile::case1_possible() const
{
    for (const auto &p : poles)
        if (p.order != 1 && p.order % 2 != 0) return false;
    return infinity_above(2) || order_at_infinity % 2 == 0;
}

bool PoleProfile::case2_possible() const
{
    for (const auto &p : poles)
        if (p.order == 2 || (p.order > 2 && p.order % 2 == 1)) return true;
    return false;
}

bool PoleProfile::case3_possible() const
{
    for (const auto &p : poles)
        if (p.order > 2) return false;
    return infinity_above(1);
}

std::string to_string(KovacicOutcome o)
{
    switch (o) {
    case KovacicOutcome::case1: return "Case1";
    case KovacicOutcome::case2: return "Case2";
    case KovacicOutcome::case3: return "Case3";
    case KovacicOutcome::not_liouvillian: return "NotLiouvillian";
    case KovacicOutcome::indeterminate: return "Indeterminate";
    }
    return "?";
}

PoleProfile pole_profile(const RationalFunction &r)
{
    PoleProfile prof;
    if (r.is_zero()) {
        prof.r_is_zero = true;
        return prof;
    }
    prof.order_at_infinity = r.order_at_infinity();
    if (r.den().degree() == 0) return prof;
    for (const auto &[factor, mult] : squarefree_factor(r.den())) {
        const auto ex = exact_roots(factor);
        if (ex.complete) {
            for (const auto &root : ex.roots) prof.poles.push_back({root.value, root.value.to_complex(), mult});
        } else {
            prof.exact = false;
            for (const auto &root : poly_complex_roots(factor)) prof.poles.push_back({std::nullopt, root.value.to_complex(), mult});
        }
    }
    return prof;
}

namespace {

// ---------------------------------------------------------------- local data

struct Local {
    std::vector<ExactPole> poles;
    std::vector<std::pair<FieldElement, int>> roots;
    RF r;
    int o_inf = 0;
    bool r_zero = false;

    // Laurent coefficients of r at pole j: (w-c)^-nu, (w-c)^(-nu+1), ...
    std::vector<FieldElement> at_pole(std::size_t j, int n) const
    {
        return laurent_at_root(r.num(), r.den(), roots, j, n);
    }
    // Coefficients of r at infinity starting at w^(-o_inf).
    std::vector<FieldElement> at_infinity(int n) const { return laurent_at_infinity(r.num(), r.den(), n); }
};

std::string label(const FieldElement &c) { return "w=" + fe(c); }

// One exponent choice at a point: contribution to omega (or theta) and the
// exponent that enters d.
struct Choice {
    FieldElement alpha;
    RF part;
    std::string text;
};

// --------------------------------------------------------------------- case 1

std::vector<Choice> case1_pole_choices(const Local &L, std::size_t j)
{
    const auto &pole = L.poles[j];
    const RF inv = RF(constant(FieldElement(1)), linear(pole.c));
    if (pole.order == 1) return {{FieldElement(1), inv, label(pole.c) + ": alpha=1"}};
    if (pole.order == 2) {
        const FieldElement b = L.at_pole(j, 1)[0];
        const FieldElement s = field_sqrt(FieldElement(1) + FieldElement(4) * b, "1+4b at " + label(pole.c));
        const FieldElement half = FieldElement::rational(1, 2);
        std::vector<Choice> out{{half + half * s, RF(constant(half + half * s)) * inv, label(pole.c) + ": alpha=" + fe(half + half * s)}};
        if (!s.is_zero())
            out.push_back({half - half * s, RF(constant(half - half * s)) * inv, label(pole.c) + ": alpha=" + fe(half - half * s)});
        return out;
    }
    const int nu = pole.order / 2;
    const auto l = L.at_pole(j, nu + 1);
    const FieldElement a = field_sqrt(l[0], "leading Laurent coefficient at " + label(pole.c));
    const auto sq = series_sqrt(l, a, nu + 1);
    RF sqrt_part;
    for (int k = 0; k <= nu - 2; ++k)
        sqrt_part += RF(constant(sq[static_cast<std::size_t>(k)]), pow(linear(pole.c), nu - k));
    const FieldElement b_over_a = FieldElement(2) * sq[static_cast<std::size_t>(nu - 1)];
    const FieldElement half = FieldElement::rational(1, 2);
    std::vector<Choice> out;
    for (int sgn : {1, -1}) {
        const FieldElement alpha = half * (FieldElement(sgn) * b_over_a + FieldElement(nu));
        out.push_back({alpha, RF(constant(FieldElement(sgn))) * sqrt_part + RF(constant(alpha)) * inv,
                       label(pole.c) + ": " + (sgn > 0 ? "+" : "-") + " alpha=" + fe(alpha)});
    }
    return out;
}

std::vector<Choice> case1_infinity_choices(const Local &L)
{
    const FieldElement half = FieldElement::rational(1, 2);
    if (L.r_zero || L.o_inf > 2) return {{FieldElement(0), RF(), "inf: alpha=0"}, {FieldElement(1), RF(), "inf: alpha=1"}};
    if (L.o_inf == 2) {
        const FieldElement b = L.at_infinity(1)[0];
        const FieldElement s = field_sqrt(FieldElement(1) + FieldElement(4) * b, "1+4b at infinity");
        std::vector<Choice> out{{half + half * s, RF(), "inf: alpha=" + fe(half + half * s)}};
        if (!s.is_zero()) out.push_back({half - half * s, RF(), "inf: alpha=" + fe(half - half * s)});
        return out;
    }
    const int nu = -L.o_inf / 2;
    const auto l = L.at_infinity(nu + 2);
    const FieldElement a = field_sqrt(l[0], "leading coefficient at infinity");
    const auto sq = series_sqrt(l, a, nu + 2);
    ExactPoly sqrt_part;
    for (int k = 0; k <= nu; ++k) sqrt_part += ExactPoly::monomial(sq[static_cast<std::size_t>(k)], nu - k);
    const FieldElement b_over_a = FieldElement(2) * sq[static_cast<std::size_t>(nu + 1)];
    std::vector<Choice> out;
    for (int sgn : {1, -1}) {
        const FieldElement alpha = half * (FieldElement(sgn) * b_over_a - FieldElement(nu));
        out.push_back({alpha, RF(sqrt_part * FieldElement(sgn)), std::string("inf: ") + (sgn > 0 ? "+" : "-") + " alpha=" + fe(alpha)});
    }
    return out;
}

// Calls f on every combination of one choice per slot.
void for_each_family(const std::vector<std::vector<Choice>> &slots, const std::function<void(const std::vector<const Choice *> &)> &f)
{
    std::vector<std::size_t> idx(slots.size(), 0);
    for (const auto &s : slots)
        if (s.empty()) return;
    for (;;) {
        std::vector<const Choice *> pick;
        for (std::size_t i = 0; i < slots.size(); ++i) pick.push_back(&slots[i][idx[i]]);
        f(pick);
        std::size_t i = 0;
        while (i < slots.size() && ++idx[i] == slots[i].size()) idx[i++] = 0;
        if (i == slots.size()) return;
    }
}

RF poly_rf(const ExactPoly &p) { return RF(p); }

bool run_case1(const Local &L, const KovacicOptions &opt, KovacicVerdict &v, bool &skipped)
{
    std::vector<std::vector<Choice>> slots;
    for (std::size_t j = 0; j < L.poles.size(); ++j) slots.push_back(case1_pole_choices(L, j));
    slots.push_back(case1_infinity_choices(L));
    bool found = false;
    for_each_family(slots, [&](const std::vector<const Choice *> &pick) {
        if (found && !opt.all_case1) return;
        FieldElement dval = pick.back()->alpha;
        RF omega = pick.back()->part;
        std::vector<std::string> family;
        for (std::size_t i = 0; i + 1 < pick.size(); ++i) {
            dval -= pick[i]->alpha;
            omega += pick[i]->part;
            family.push_back(pick[i]->text);
        }
        family.push_back(pick.back()->text);
        std::string fam;
        for (const auto &f : family) fam += (fam.empty() ? "" : "; ") + f;
        const auto d = nonneg_integer(dval);
        if (!d) {
            v.log.push_back("case1 [" + fam + "] d=" + fe(dval) + " rejected");
            return;
        }
        if (*d > opt.max_degree) {
            v.log.push_back("case1 [" + fam + "] d=" + std::to_string(*d) + " above max_degree, skipped");
            skipped = true;
            return;
        }
        const RF zeroth = omega.derivative() + omega * omega - L.r;
        std::string dims;
        const auto P = solve_monic({zeroth, RF(constant(FieldElement(2))) * omega, poly_rf(constant(FieldElement(1)))},
                                   static_cast<int>(*d), dims);
        if (!P) {
            v.log.push_back("case1 [" + fam + "] d=" + std::to_string(*d) + " system " + dims + " inconsistent");
            return;
        }
        KovacicCertificate cert;
        cert.kovacic_case = 1;
        cert.n = 1;
        cert.degree = static_cast<int>(*d);
        cert.omega = omega;
        cert.P = *P;
        cert.family = family;
        const RF u = omega + RF(P->derivative(), *P);
        cert.verified = (u.derivative() + u * u - L.r).is_zero();
        v.log.push_back("case1 [" + fam + "] d=" + std::to_string(*d) + " solved, verified=" + (cert.verified ? "yes" : "no"));
        v.certificates.push_back(std::move(cert));
        found = true;
    });
    return found;
}

// --------------------------------------------------------------------- case 2

// Integers 2 + k s for k in {-2, 0, 2}, given s^2 = 1 + 4b.
std::vector<long> order2_exponents(const FieldElement &b, int base, const std::vector<long> &ks, long den)
{
    std::set<long> out{base};
    const auto s = rational_sqrt(FieldElement(1) + FieldElement(4) * b);
    if (s) {
        for (long k : ks) {
            Rational e = Rational(base) + Rational(k) * *s / Rational(den);
            e.canonicalize();
            if (e.get_den() == 1) out.insert(e.get_num().get_si());
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<long>> case2_sets(const Local &L)
{
    std::vector<std::vector<long>> sets;
    for (std::size_t j = 0; j < L.poles.size(); ++j) {
        const int o = L.poles[j].order;
        if (o == 1) sets.push_back({4});
        else if (o == 2) sets.push_back(order2_exponents(L.at_pole(j, 1)[0], 2, {-2, 2}, 1));
        else sets.push_back({o});
    }
    if (L.r_zero || L.o_inf > 2) sets.push_back({0, 2, 4});
    else if (L.o_inf == 2) sets.push_back(order2_exponents(L.at_infinity(1)[0], 2, {-2, 2}, 1));
    else sets.push_back({L.o_inf});
    return sets;
}

void for_each_tuple(const std::vector<std::vector<long>> &sets, const std::function<void(const std::vector<long> &)> &f)
{
    std::vector<std::size_t> idx(sets.size(), 0);
    for (;;) {
        std::vector<long> pick;
        for (std::size_t i = 0; i < sets.size(); ++i) pick.push_back(sets[i][idx[i]]);
        f(pick);
        std::size_t i = 0;
        while (i < sets.size() && ++idx[i] == sets[i].size()) idx[i++] = 0;
        if (i == sets.size()) return;
    }
}

std::string tuple_text(const Local &L, const std::vector<long> &e)
{
    std::string s;
    for (std::size_t i = 0; i < L.poles.size(); ++i) s += label(L.poles[i].c) + ":" + std::to_string(e[i]) + "; ";
    return s + "inf:" + std::to_string(e.back());
}

RF theta_of(const Local &L, const std::vector<long> &e, const Rational &scale)
{
    RF theta;
    for (std::size_t i = 0; i < L.poles.size(); ++i) {
        Rational c = scale * Rational(e[i]);
        c.canonicalize();
        theta += RF(constant(FieldElement(c)), linear(L.poles[i].c));
    }
    return theta;
}

bool run_case2(const Local &L, const KovacicOptions &opt, KovacicVerdict &v, bool &skipped)
{
    bool found = false;
    const RF four_r = RF(constant(FieldElement(4))) * L.r;
    const RF dr = L.r.derivative();
    const RF three = RF(constant(FieldElement(3)));
    for_each_tuple(case2_sets(L), [&](const std::vector<long> &e) {
        if (found) return;
        long diff = e.back();
        for (std::size_t i = 0; i + 1 < e.size(); ++i) diff -= e[i];
        const std::string txt = tuple_text(L, e);
        if (diff < 0 || diff % 2 != 0) {
            v.log.push_back("case2 [" + txt + "] d=" + std::to_string(diff) + "/2 rejected");
            return;
        }
        const long d = diff / 2;
        if (d > opt.max_degree) {
            v.log.push_back("case2 [" + txt + "] d=" + std::to_string(d) + " above max_degree, skipped");
            skipped = true;
            return;
        }
        const RF th = theta_of(L, e, Rational(1, 2));
        const RF th1 = th.derivative();
        const RF c0 = th1.derivative() + three * th * th1 + th * th * th - four_r * th - RF(constant(FieldElement(2))) * dr;
        const RF c1 = three * th * th + three * th1 - four_r;
        std::string dims;
        const auto P = solve_monic({c0, c1, three * th, poly_rf(constant(FieldElement(1)))}, static_cast<int>(d), dims);
        if (!P) {
            v.log.push_back("case2 [" + txt + "] d=" + std::to_string(d) + " system " + dims + " inconsistent");
            return;
        }
        KovacicCertificate cert;
        cert.kovacic_case = 2;
        cert.n = 2;
        cert.degree = static_cast<int>(d);
        cert.omega = th;
        cert.P = *P;
        cert.family = {txt};
        const RF phi = th + RF(P->derivative(), *P);
        const RF phi1 = phi.derivative();
        cert.verified = (phi1.derivative() + three * phi * phi1 + phi * phi * phi - four_r * phi - RF(constant(FieldElement(2))) * dr).is_zero();
        v.log.push_back("case2 [" + txt + "] d=" + std::to_string(d) + " solved, verified=" + (cert.verified ? "yes" : "no"));
        v.certificates.push_back(std::move(cert));
        found = true;
    });
    return found;
}

// --------------------------------------------------------------------- case 3

// Polynomial affine in the unknown coefficients x_0..x_{d-1} of a monic P:
// c[j] multiplies x_j, c[d] is the constant part.
template <class T> struct LinPoly {
    std::vector<Poly<T>> c;

    LinPoly derivative() const
    {
        LinPoly out{c};
        for (auto &p : out.c) p = p.derivative();
        return out;
    }
    LinPoly &add_mul(const Poly<T> &f, const LinPoly &o)
    {
        if (f.is_zero()) return *this;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += f * o.c[j];
        return *this;
    }
};

template <class T> struct Case3Data {
    Poly<T> S, dS, Stheta, S2r;
};

// P_{-1} of the recursion for P = x_0 + ... + x_{d-1} w^{d-1} + w^d.
template <class T> LinPoly<T> case3_residual(const Case3Data<T> &D, int n, int d, const Poly<T> &fixed_P = {})
{
    const bool fixed = !fixed_P.is_zero();
    const std::size_t width = fixed ? 1 : static_cast<std::size_t>(d) + 1;
    LinPoly<T> next{std::vector<Poly<T>>(width)};
    LinPoly<T> cur{std::vector<Poly<T>>(width)};
    if (fixed) cur.c[0] = -fixed_P;
    else
        for (int j = 0; j <= d; ++j) cur.c[static_cast<std::size_t>(j)] = Poly<T>::monomial(T(-1), j);
    const Poly<T> minusS = -D.S;
    for (int i = n; i >= 0; --i) {
        LinPoly<T> prev{std::vector<Poly<T>>(width)};
        prev.add_mul(minusS, cur.derivative());
        prev.add_mul(D.dS * T(static_cast<long>(n - i)) - D.Stheta, cur);
        prev.add_mul(D.S2r * T(-static_cast<long>(n - i) * (i + 1)), next);
        next = std::move(cur);
        cur = std::move(prev);
    }
    return cur;
}

template <class T> void to_system(const LinPoly<T> &res, int d, Matrix<T> &A, std::vector<T> &b)
{
    int rows = 0;
    for (const auto &p : res.c) rows = std::max(rows, p.degree() + 1);
    A.assign(static_cast<std::size_t>(rows), std::vector<T>(static_cast<std::size_t>(d), T(0)));
    b.assign(static_cast<std::size_t>(rows), T(0));
    for (int k = 0; k < rows; ++k) {
        for (int j = 0; j < d; ++j) A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = res.c[static_cast<std::size_t>(j)].coeff(k);
        b[static_cast<std::size_t>(k)] = -res.c[static_cast<std::size_t>(d)].coeff(k);
    }
}

Poly<ModP> reduce_poly(const PrimeEmbedding &emb, const ExactPoly &p)
{
    std::vector<ModP> out;
    for (const auto &x : p.coeffs()) out.push_back(emb.reduce(x));
    return Poly<ModP>(out);
}

bool run_case3(const Local &L, const KovacicOptions &opt, KovacicVerdict &v, bool &skipped)
{
    ExactPoly S = constant(FieldElement(1));
    for (const auto &p : L.poles) S = S * linear(p.c);
    const RF s2r = RF(S * S) * L.r;
    if (!s2r.is_polynomial()) throw ContractViolation("kovacic: S^2 r is not a polynomial");
    const ExactPoly S2r = s2r.num() * s2r.den().coeff(0).inverse();

    std::vector<FieldElement> order2_b(L.poles.size());
    for (std::size_t j = 0; j < L.poles.size(); ++j)
        if (L.poles[j].order == 2) order2_b[j] = L.at_pole(j, 1)[0];
    const FieldElement b_inf = (!L.r_zero && L.o_inf == 2) ? L.at_infinity(1)[0] : FieldElement(0);

    for (int n : {4, 6, 12}) {
        std::vector<long> ks;
        for (long k = -n / 2; k <= n / 2; ++k)
            if (k != 0) ks.push_back(12 * k);
        std::vector<std::vector<long>> sets;
        for (std::size_t j = 0; j < L.poles.size(); ++j)
            sets.push_back(L.poles[j].order == 1 ? std::vector<long>{12} : order2_exponents(order2_b[j], 6, ks, n));
        sets.push_back(order2_exponents(b_inf, 6, ks, n));

        long candidates = 0, admissible = 0, ruled_out_mod_p = 0, exact_solves = 0;
        bool found = false;
        for_each_tuple(sets, [&](const std::vector<long> &e) {
            if (found) return;
            ++candidates;
            long diff = e.back();
            for (std::size_t i = 0; i + 1 < e.size(); ++i) diff -= e[i];
            if (diff < 0 || (static_cast<long>(n) * diff) % 12 != 0) return;
            const long d = static_cast<long>(n) * diff / 12;
            if (d > opt.max_degree) {
                skipped = true;
                v.log.push_back("case3 n=" + std::to_string(n) + " [" + tuple_text(L, e) + "] d=" + std::to_string(d) +
                                " above max_degree, skipped");
                return;
            }
            ++admissible;
            const RF theta = theta_of(L, e, Rational(n, 12));
            const RF st = RF(S) * theta;
            Case3Data<FieldElement> D{S, S.derivative(), st.num() * st.den().coeff(0).inverse(), S2r};
            if (opt.modular_filter) {
                try {
                    std::set<FieldElement::Radicand> gens;
                    for (const ExactPoly *p : {&D.S, &D.Stheta, &D.S2r})
                        for (const auto &x : p->coeffs())
                            for (auto g : x.generators()) gens.insert(g);
                    const auto emb = PrimeEmbedding::choose({gens.begin(), gens.end()});
                    ModScope scope(emb.prime());
                    Case3Data<ModP> M{reduce_poly(emb, D.S), reduce_poly(emb, D.dS), reduce_poly(emb, D.Stheta),
                                      reduce_poly(emb, D.S2r)};
                    Matrix<ModP> A;
                    std::vector<ModP> b;
                    to_system(case3_residual(M, n, static_cast<int>(d)), static_cast<int>(d), A, b);
                    const auto res = solve_linear(A, b);
                    if (res.rank == d && !res.consistent) {
                        ++ruled_out_mod_p;
                        return;
                    }
                } catch (const NotReducible &) {
                    // fall through to the exact solve
                }
            }
            ++exact_solves;
            Matrix<FieldElement> A;
            std::vector<FieldElement> b;
            to_system(case3_residual(D, n, static_cast<int>(d)), static_cast<int>(d), A, b);
            const auto res = solve_linear(A, b);
            if (!res.consistent) return;
            std::vector<FieldElement> pc(res.solution.begin(), res.solution.end());
            pc.resize(static_cast<std::size_t>(d));
            pc.push_back(FieldElement(1));
            const ExactPoly P(pc);
            KovacicCertificate cert;
            cert.kovacic_case = 3;
            cert.n = n;
            cert.degree = static_cast<int>(d);
            cert.omega = theta;
            cert.P = P;
            cert.family = {tuple_text(L, e)};
            cert.verified = case3_residual(D, n, static_cast<int>(d), P).c[0].is_zero();
            v.log.push_back("case3 n=" + std::to_string(n) + " [" + tuple_text(L, e) + "] d=" + std::to_string(d) +
                            " solved, verified=" + (cert.verified ? "yes" : "no"));
            v.certificates.push_back(std::move(cert));
            found = true;
        });
        v.log.push_back("case3 n=" + std::to_string(n) + ": " + std::to_string(candidates) + " candidates, " +
                        std::to_string(admissible) + " with integer d >= 0, " + std::to_string(ruled_out_mod_p) +
                        " ruled out mod p, " + std::to_string(exact_solves) + " exact solves");
        if (found) return true;
    }
    return false;
}

} // namespace

KovacicVerdict kovacic(const RationalFunction &r, const KovacicOptions &opt)
{
    KovacicVerdict v;
    v.profile = pole_profile(r);
    const auto &prof = v.profile;
    {
        std::ostringstream os;
        os << "profile: " << prof.poles.size() << " poles, orders";
        for (const auto &p : prof.poles) os << ' ' << p.order;
        os << ", order at infinity " << (prof.r_is_zero ? std::string("inf") : std::to_string(prof.order_at_infinity));
        v.log.push_back(os.str());
    }
    const bool c1 = prof.case1_possible(), c2 = prof.case2_possible(), c3 = prof.case3_possible();
    v.log.push_back(std::string("necessary conditions: case1 ") + (c1 ? "possible" : "excluded") + ", case2 " +
                    (c2 ? "possible" : "excluded") + ", case3 " + (c3 ? "possible" : "excluded"));
    if (!c1 && !c2 && !c3) {
        v.outcome = KovacicOutcome::not_liouvillian;
        return v;
    }
    if (!prof.exact) {
        v.outcome = KovacicOutcome::indeterminate;
        v.indeterminate_reason = "pole locations are not exact in the coefficient field";
        v.log.push_back("indeterminate: " + v.indeterminate_reason);
        return v;
    }
    Local L;
    L.r = r;
    L.r_zero = prof.r_is_zero;
    L.o_inf = prof.order_at_infinity;
    for (const auto &p : prof.poles) {
        L.poles.push_back({*p.location, p.order});
        L.roots.emplace_back(*p.location, p.order);
    }
    bool skipped = false;
    try {
        if (c1 && run_case1(L, opt, v, skipped)) {
            v.outcome = KovacicOutcome::case1;
            return v;
        }
        if (c2 && run_case2(L, opt, v, skipped)) {
            v.outcome = KovacicOutcome::case2;
            return v;
        }
        if (c3 && run_case3(L, opt, v, skipped)) {
            v.outcome = KovacicOutcome::case3;
            return v;
        }
    } catch (const Indeterminate &e) {
        v.outcome = KovacicOutcome::indeterminate;
        v.indeterminate_reason = e.what();
        v.log.push_back(std::string("indeterminate: ") + e.what());
        return v;
    }
    if (skipped) {
        v.outcome = KovacicOutcome::indeterminate;
        v.indeterminate_reason = "candidate degree above max_degree";
    } else {
        v.outcome = KovacicOutcome::not_liouvillian;
    }
    v.log.push_back("outcome: " + to_string(v.outcome));
    return v;
}

namespace {
std::string g12(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}
} // namespace

nlohmann::json to_json(const PoleProfile &p)
{
    nlohmann::json poles = nlohmann::json::array();
    for (const auto &q : p.poles) {
        poles.push_back({{"location", q.location ? to_json(*q.location) : nlohmann::json(nullptr)},
                         {"approx", {g12(q.approx.real()), g12(q.approx.imag())}},
                         {"order", q.order}});
    }
    return {{"poles", poles},
            {"order_at_infinity", p.r_is_zero ? nlohmann::json("inf") : nlohmann::json(p.order_at_infinity)},
            {"r_is_zero", p.r_is_zero},
            {"exact", p.exact}};
}

nlohmann::json to_json(const KovacicVerdict &v)
{
    nlohmann::json certs = nlohmann::json::array();
    for (const auto &c : v.certificates) {
        certs.push_back({{"case", c.kovacic_case},
                         {"n", c.n},
                         {"degree", c.degree},
                         {c.kovacic_case == 1 ? "omega" : "theta", to_json(c.omega)},
                         {"P", to_json(c.P)},
                         {"family", c.family},
                         {"verified", c.verified}});
    }
    return {{"outcome", to_string(v.outcome)},
            {"liouvillian", v.liouvillian()},
            {"profile", to_json(v.profile)},
            {"certificates", certs},
            {"log", v.log},
            {"indeterminate_reason", v.indeterminate_reason}};
}

} // namespace dyson
