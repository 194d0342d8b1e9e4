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

// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>

#include <unistd.h>

#include "dyson/dynamics/monodromy.hpp"
#include "dyson/dynamics/period.hpp"
#include "dyson/dynamics/solutions.hpp"
#include "dyson/galois/kovacic.hpp"
#include "dyson/galois/lame.hpp"
#include "dyson/model/dyson.hpp"
#include "dyson/nve/nve.hpp"
#include "dyson/report/report.hpp"

using namespace dyson;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome taylor()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto K = taylor_truncate(3).polynomial;
    const auto L = taylor_truncate(4).polynomial;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const FieldElement s3 = FieldElement::sqrt_of(3L);
    const bool ok = K.coefficient({2, 0, 0, 0}) == FieldElement::rational(4, 3) &&
                    K.coefficient({2, 1, 0, 0}) == FieldElement::rational(4, 9) * s3 &&
                    L.coefficient({4, 0, 0, 0}) == FieldElement::rational(4, 9) &&
                    L.coefficient({3, 1, 0, 0}) == FieldElement::rational(8, 9);
    return {ok && secs < 1.0, std::string("4/3, 4sqrt3/9, 4/9, 8/9 ") + (ok ? "exact" : "MISMATCH") + ", " + fmt("%.3f s", secs)};
}

Outcome turning()
{
    const double cs = c_star(128).to_double();
    double dq = 0, res = 0;
    for (int i = 1; i <= 50; ++i) {
        const double c = 0.02 + (cs - 0.02) * i / 51;
        const auto tp = turning_points_closed(c);
        const auto num = turning_points_numeric(tp.E);
        dq = std::max({dq, std::abs(num.first - tp.q_minus), std::abs(num.second - tp.q_plus)});
        res = std::max(res, tp.quartic_residual);
    }
    const auto eq = turning_points_closed(cs);
    const double req = std::max(std::abs(eq.r1 + 0.5), std::abs(eq.r2 + 0.5));
    return {dq < 1e-9 && res < 1e-12 && req < 1e-10,
            "50 points: max dq " + fmt("%.2e", dq) + ", quartic residual " + fmt("%.2e", res) + ", |r+1/2| at c* " + fmt("%.2e", req)};
}

Outcome periods()
{
    const double emin = energy_min(128).to_double();
    const double dT = std::abs(period(emin + 1e-6).T - M_PI);
    double worst = 0;
    for (double off : {0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0}) {
        const double E = emin + off;
        worst = std::max(worst, std::abs(return_map_period(E, 2.5e-4, 2).period - period(E).T));
    }
    const double drift = return_map_period(emin + 1.0, 1e-3, 1000).max_energy_drift;
    return {dT < 1e-3 && worst < 1e-6 && drift < 1e-8,
            "|T - pi| " + fmt("%.2e", dT) + ", quadrature vs return map " + fmt("%.2e", worst) + ", drift " + fmt("%.2e", drift)};
}

Outcome branches()
{
    const auto one = eta_monodromy(1e-3, 2000, 1);
    const auto two = eta_monodromy(1e-3, 2000, 2);
    const auto away = eta_monodromy(cplx(3 * std::sqrt(3.0) / 16 + 1e-2, 0), 1e-3, 2000, 1);
    const bool ok = one.ok && two.ok && away.ok && one.branch_changed && !two.branch_changed && !away.branch_changed;
    return {ok, std::string("one loop ") + (one.branch_changed ? "flips" : "keeps") + ", two loops " +
                    (two.branch_changed ? "flip" : "restore") + ", away loop " + (away.branch_changed ? "flips" : "keeps") +
                    " the radical; log eta winding " + fmt("%.3f", one.log_eta_winding)};
}

Outcome elliptic()
{
    double e = 0, wp = 0;
    for (long h : {1L, 2L, 3L}) {
        const auto c = verify_phi(Rational(h));
        e = std::max(e, c.energy_residual);
        wp = std::max(wp, c.wp_residual);
    }
    const auto psi = verify_psi();
    return {e < 1e-10 && wp < 1e-20 && psi.ode_residual < 1e-12 && psi.identity_exact,
            "phi " + fmt("%.1e", e) + ", wp " + fmt("%.1e", wp) + ", psi " + fmt("%.1e", psi.ode_residual) +
                ", psi identity " + (psi.identity_exact ? "exact" : "MISMATCH")};
}

Outcome nve_soundness()
{
    double dev = 0, det = 0, wr = 0;
    for (int order : {3, 4}) {
        const auto vs = derive_variational(taylor_truncate(order));
        for (Mode m : {Mode::symmetric, Mode::antisymmetric}) {
            const auto r = nve_flow_oracle(vs, scalar_nve(vs, m));
            dev = std::max(dev, r.deviation);
            det = std::max(det, std::abs(r.monodromy_det - 1));
            wr = std::max(wr, r.wronskian_drift);
        }
    }
    return {dev < 1e-6 && det < 1e-8 && wr < 1e-8,
            "2 truncations x 2 modes: deviation " + fmt("%.1e", dev) + ", |det - 1| " + fmt("%.1e", det) + ", Wronskian " + fmt("%.1e", wr)};
}

bool certificates_hold(const KovacicVerdict &v, const RationalFunction &r)
{
    for (const auto &c : v.certificates) {
        if (c.kovacic_case != 1) return false;
        const RationalFunction u = c.omega + RationalFunction(c.P.derivative(), c.P);
        if (!(u.derivative() + u * u - r).is_zero()) return false;
    }
    return !v.certificates.empty();
}

Outcome corpus()
{
    const RationalFunction w = RationalFunction::variable();
    const RationalFunction r0, r1(1), euler = RationalFunction(FieldElement::rational(3, 16)) / (w * w);
    const auto v0 = kovacic(r0), v1 = kovacic(r1), va = kovacic(w), ve = kovacic(euler);
    const bool ok = v0.outcome == KovacicOutcome::case1 && certificates_hold(v0, r0) && v1.outcome == KovacicOutcome::case1 &&
                    certificates_hold(v1, r1) && va.outcome == KovacicOutcome::not_liouvillian && ve.liouvillian() &&
                    certificates_hold(ve, euler);
    return {ok, "0: " + to_string(v0.outcome) + ", 1: " + to_string(v1.outcome) + ", w: " + to_string(va.outcome) +
                    ", (3/16)/w^2: " + to_string(ve.outcome)};
}

Outcome verdicts()
{
    const auto sieve = lame_sieve({Rational(4), Rational(-8, 3), Rational(4, 3), Rational(0)});
    const auto printed = kovacic(algebrize(printed_nve_quartic()).r);
    const auto L = derive_variational(taylor_truncate(4));
    const auto sym = kovacic(algebrize(scalar_nve(L, Mode::symmetric)).r);
    const auto anti = kovacic(algebrize(scalar_nve(L, Mode::antisymmetric)).r);
    const bool produced = sym.outcome != KovacicOutcome::indeterminate && anti.outcome != KovacicOutcome::indeterminate;
    return {sieve.non_commutative() && printed.outcome == KovacicOutcome::not_liouvillian && produced,
            std::string("A = 4 sieve ") + (sieve.non_commutative() ? "all fail" : "ADMISSIBLE") + "; printed: " + to_string(printed.outcome) +
                "; derived: symmetric " + to_string(sym.outcome) + " (tangential), antisymmetric " + to_string(anti.outcome)};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

Outcome determinism()
{
#ifdef DYSON_CLI
    const auto base = std::filesystem::temp_directory_path() / ("dyson-acceptance-" + std::to_string(::getpid()));
    std::string first, second;
    for (const char *run : {"a", "b"}) {
        const auto dir = base / run;
        const std::string cmd = std::string("\"") + DYSON_CLI + "\" report --out \"" + dir.string() + "\" > /dev/null 2>&1";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) return {false, "report exited with status " + std::to_string(rc)};
        (run[0] == 'a' ? first : second) = slurp(dir / "report.json");
    }
    std::filesystem::remove_all(base);
    const bool same = !first.empty() && first == second;
    return {same, std::string("two CLI report runs: ") + (same ? "byte-identical" : "DIFFER") + ", " + std::to_string(first.size()) + " bytes"};
#else
    const auto a = report::render_json(report::build_report({}));
    const auto b = report::render_json(report::build_report({}));
    return {a == b, std::string("two in-process report runs: ") + (a == b ? "byte-identical" : "DIFFER")};
#endif
}

} // namespace

int main()
{
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"Taylor truncation exactness", taylor},     {"turning-point oracle equivalence", turning},
        {"period limit and integrator", periods},    {"branch monodromy", branches},
        {"elliptic certificates", elliptic},         {"NVE soundness", nve_soundness},
        {"Kovacic regression corpus", corpus},       {"verdict reproduction", verdicts},
        {"end-to-end determinism", determinism},
    };
    int failed = 0, k = 0;
    for (const auto &c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", ++k, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria pass\n", k - failed, k);
    return failed == 0 ? 0 : 1;
}
