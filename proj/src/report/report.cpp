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

#include "dyson/report/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "dyson/dynamics/monodromy.hpp"
#include "dyson/dynamics/period.hpp"
#include "dyson/dynamics/solutions.hpp"
#include "dyson/galois/kovacic.hpp"
#include "dyson/galois/lame.hpp"
#include "dyson/galois/verdict.hpp"
#include "dyson/io/exact_json.hpp"
#include "dyson/model/dyson.hpp"
#include "dyson/nve/nve.hpp"

namespace dyson::report {

using nlohmann::json;

namespace {

const char *PASS = "PASS";
const char *FAIL = "FAIL";
const char *INDET = "INDETERMINATE";

int rank(const std::string &s) { return s == FAIL ? 2 : s == INDET ? 1 : 0; }
std::string worse(const std::string &a, const std::string &b) { return rank(a) >= rank(b) ? a : b; }

// Accumulates checks and the section status.
class Section {
public:
    explicit Section(std::string name) : name_(std::move(name)) {}

    void check(const std::string &id, const std::string &what, double value, double tolerance, bool ok)
    {
        add({{"id", id}, {"description", what}, {"value", number(value)}, {"tolerance", number(tolerance)}}, ok ? PASS : FAIL);
    }
    void exact(const std::string &id, const std::string &what, const std::string &value, bool ok)
    {
        add({{"id", id}, {"description", what}, {"value", value}, {"tolerance", "exact"}}, ok ? PASS : FAIL);
    }
    void status_check(const std::string &id, const std::string &what, const std::string &value, const std::string &status)
    {
        add({{"id", id}, {"description", what}, {"value", value}, {"tolerance", "exact"}}, status);
    }
    json &data() { return data_; }
    json finish() const { return {{"name", name_}, {"status", status_}, {"checks", checks_}, {"data", data_}}; }

private:
    void add(json c, const std::string &status)
    {
        c["status"] = status;
        checks_.push_back(std::move(c));
        status_ = worse(status_, status);
    }
    std::string name_;
    std::string status_ = PASS;
    json checks_ = json::array();
    json data_ = json::object();
};

std::string monomial_text(const Exponent &e)
{
    static const char *names[] = {"q1", "q2", "p1", "p2"};
    std::string s;
    for (int k = 0; k < 4; ++k) {
        if (e[static_cast<std::size_t>(k)] == 0) continue;
        if (!s.empty()) s += ' ';
        s += names[k];
        if (e[static_cast<std::size_t>(k)] > 1) s += "^" + std::to_string(e[static_cast<std::size_t>(k)]);
    }
    return s.empty() ? "1" : s;
}

json multipoly_json(const MultiPoly &p)
{
    json out = json::array();
    for (const auto &[e, c] : p.terms()) out.push_back({{"monomial", monomial_text(e)}, {"coefficient", dyson::to_json(c)}});
    return out;
}

// ------------------------------------------------------------------ sections

json equilibrium(const PipelineConfig &cfg)
{
    Section s("equilibrium");
    const auto bits = static_cast<mpfr_prec_t>(cfg.precision);
    const double cs = c_star(bits).to_double();
    const double emin = energy_min(bits).to_double();
    s.data() = {{"c_star", number(cs)}, {"E_min", number(emin)}, {"q_star", number(M_PI / 3)}};
    const auto tp = turning_points_closed(cs, bits);
    s.check("r1", "r1 at c* equals -1/2", tp.r1, 1e-10, std::abs(tp.r1 + 0.5) < 1e-10);
    s.check("r2", "r2 at c* equals -1/2", tp.r2, 1e-10, std::abs(tp.r2 + 0.5) < 1e-10);
    s.check("eps_delta", "eps = delta = 0 at c*", std::max(std::abs(tp.eps), std::abs(tp.delta)), 0.0, tp.eps == 0 && tp.delta == 0);
    s.check("E_min", "E_min equals the diagonal potential at pi/3", std::abs(potential_tilde(M_PI / 3) - emin), 1e-14,
            std::abs(potential_tilde(M_PI / 3) - emin) < 1e-14);
    // Linearization M at the equilibrium: M^2 = -4 I means both frequencies are 2.
    const auto M = derive_variational(taylor_truncate(3)).evaluate(0.0);
    double dev = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0;
            for (int k = 0; k < 4; ++k) acc += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * M[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            dev = std::max(dev, std::abs(acc + (i == j ? 4.0 : 0.0)));
        }
    s.data()["frequencies"] = {2, 2};
    s.check("frequencies", "linearization squares to -4 I (frequencies 2, 2)", dev, 1e-12, dev < 1e-12);
    return s.finish();
}

json truncations(const PipelineConfig &)
{
    Section s("truncations");
    const auto K = taylor_truncate(3).polynomial;
    const auto L = taylor_truncate(4).polynomial;
    s.data() = {{"K", multipoly_json(K)}, {"Lambda", multipoly_json(L)}};
    const FieldElement s3 = FieldElement::sqrt_of(3L);
    struct Item {
        const MultiPoly *p;
        Exponent e;
        FieldElement want;
        const char *id;
    };
    const Item items[] = {{&K, {2, 0, 0, 0}, FieldElement::rational(4, 3), "K.q1^2"},
                          {&K, {2, 1, 0, 0}, FieldElement::rational(4, 9) * s3, "K.q1^2 q2"},
                          {&L, {4, 0, 0, 0}, FieldElement::rational(4, 9), "Lambda.q1^4"},
                          {&L, {3, 1, 0, 0}, FieldElement::rational(8, 9), "Lambda.q1^3 q2"}};
    for (const auto &it : items) {
        const FieldElement got = it.p->coefficient(it.e);
        s.exact(it.id, "coefficient of " + monomial_text(it.e) + " equals " + it.want.str(), got.str(), got == it.want);
    }
    return s.finish();
}

json turning_points(const PipelineConfig &cfg)
{
    Section s("turning_points");
    const auto bits = static_cast<mpfr_prec_t>(cfg.precision);
    const double cs = c_star(bits).to_double();
    json rows = json::array();
    double dq = 0, res = 0;
    const int n = 10;
    for (int i = 1; i <= n; ++i) {
        const double c = 0.02 + (cs - 0.02) * i / (n + 1);
        const auto tp = turning_points_closed(c, bits);
        const auto num = turning_points_numeric(tp.E, bits);
        const double d = std::max(std::abs(num.first - tp.q_minus), std::abs(num.second - tp.q_plus));
        dq = std::max(dq, d);
        res = std::max(res, tp.quartic_residual);
        rows.push_back({{"c", number(c)},
                        {"E", number(tp.E)},
                        {"B", number(tp.B)},
                        {"q_minus", number(tp.q_minus)},
                        {"q_plus", number(tp.q_plus)},
                        {"eps", number(tp.eps)},
                        {"delta", number(tp.delta)},
                        {"closed_vs_numeric", number(d)},
                        {"tolerance", number(1e-9)}});
    }
    s.data()["rows"] = rows;
    s.check("q_agreement", "closed form vs bracketed roots, max |dq|", dq, 1e-9, dq < 1e-9);
    s.check("quartic_residual", "max |(1-r)^2 (1-r^2) - 16 c^2|", res, 1e-12, res < 1e-12);
    return s.finish();
}

json period_section(const PipelineConfig &cfg)
{
    Section s("period_scan");
    const auto bits = static_cast<mpfr_prec_t>(cfg.precision);
    const auto rows = period_scan(cfg.grid.min_offset, cfg.grid.max_offset, cfg.grid.count, cfg.tol, bits);
    json table = json::array();
    int failures = 0;
    for (const auto &r : rows) {
        failures += r.status == "quadrature_failure";
        table.push_back({{"c", number(r.c)},
                         {"E", number(r.E)},
                         {"T", number(r.T)},
                         {"log_eta", number(r.log_eta)},
                         {"phi", number(r.phi)},
                         {"eps", number(r.eps)},
                         {"delta", number(r.delta)},
                         {"error_estimate", number(r.error_estimate)},
                         {"tolerance", number(cfg.tol)},
                         {"status", r.status}});
    }
    std::ostringstream csv;
    write_period_csv(csv, rows);
    s.data() = {{"grid", to_string(cfg.grid)}, {"rows", table}, {"csv", csv.str()}};
    s.check("quadrature", "rows whose quadrature failed", failures, 0, failures == 0);

    // Row closest to E_min (largest c before the limit row).
    const auto &near = rows[rows.size() - 2];
    s.check("limit", "T at the smallest offset is within 1e-3 of pi", std::abs(near.T - M_PI), 1e-3, std::abs(near.T - M_PI) < 1e-3);
    bool mono = true;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) mono = mono && rows[i].T > rows[i - 1].T;
    s.exact("monotone", "T strictly decreasing in E", mono ? "yes" : "no", mono);

    double worst = 0;
    const double emin = energy_min(bits).to_double();
    for (double off : {0.5, 1.0, 2.0}) {
        const double E = emin + off;
        const double Tq = period(E, cfg.tol, bits).T;
        const double Tr = return_map_period(E, 2.5e-4, 2).period;
        worst = std::max(worst, std::abs(Tq - Tr));
    }
    s.check("return_map", "quadrature vs symplectic return map (3 energies)", worst, 1e-6, worst < 1e-6);
    const auto drift = return_map_period(emin + 1.0, 1e-3, 1000);
    s.check("energy_drift", "Yoshida energy drift over 1000 periods", drift.max_energy_drift, 1e-8, drift.max_energy_drift < 1e-8);
    return s.finish();
}

json monodromy(const PipelineConfig &cfg)
{
    Section s("monodromy");
    const double r = cfg.monodromy_radius;
    const int n = cfg.monodromy_steps;
    const double cs = 3.0 * std::sqrt(3.0) / 16.0;
    const auto one = eta_monodromy(r, n, 1);
    const auto two = eta_monodromy(r, n, 2);
    const auto away = eta_monodromy(cplx(cs + 10 * r, 0), r, n, 1);
    auto loop_json = [](const MonodromyResult &m) {
        return json{{"branch_changed", m.branch_changed}, {"roots_swapped", m.roots_swapped},
                    {"log_eta_winding", number(m.log_eta_winding)}, {"B_before", number(m.B_before.real())},
                    {"B_after", number(m.B_after.real())}, {"min_guard_ratio", number(m.min_guard_ratio)},
                    {"ok", m.ok}, {"error", m.error}};
    };
    s.data() = {{"radius", number(r)}, {"steps", n}, {"one_loop", loop_json(one)}, {"two_loops", loop_json(two)}, {"away", loop_json(away)}};
    const bool guards = one.ok && two.ok && away.ok;
    s.status_check("guards", "continuation unambiguous on every loop", guards ? "yes" : "no", guards ? PASS : INDET);
    s.exact("one_loop", "one loop around c* flips the radical feeding B", one.branch_changed ? "flipped" : "same",
            one.branch_changed && one.roots_swapped);
    s.exact("two_loops", "two loops restore it", two.branch_changed ? "flipped" : "same", !two.branch_changed && !two.roots_swapped);
    s.exact("away", "a loop not enclosing c* does not flip", away.branch_changed ? "flipped" : "same", !away.branch_changed);
    s.check("winding", "log eta winds once per loop", std::abs(one.log_eta_winding - 1), 1e-6,
            std::abs(one.log_eta_winding - 1) < 1e-6 && std::abs(two.log_eta_winding - 2) < 1e-6 && std::abs(away.log_eta_winding) < 1e-6);
    return s.finish();
}

json verify_solutions(const PipelineConfig &cfg)
{
    Section s("verify_solutions");
    const auto bits = static_cast<mpfr_prec_t>(cfg.precision);
    json phis = json::array();
    for (long h : {1L, 2L, 3L}) {
        const auto c = verify_phi(Rational(h), {}, bits);
        const std::string id = "phi.h=" + std::to_string(h);
        phis.push_back({{"h", h}, {"g2", dyson::to_json(c.invariants.g2)}, {"g3", dyson::to_json(c.invariants.g3)},
                        {"energy_residual", number(c.energy_residual)}, {"accel_residual", number(c.accel_residual)},
                        {"wp_residual", number(c.wp_residual)}, {"points", c.points}});
        s.check(id + ".energy", "phi energy relation", c.energy_residual, 1e-10, c.energy_residual < 1e-10);
        s.check(id + ".wp", "wp differential equation", c.wp_residual, 1e-20, c.wp_residual < 1e-20);
    }
    const auto psi = verify_psi({}, bits);
    s.check("psi.ode", "psi solves the quartic diagonal equation", psi.ode_residual, 1e-12, psi.ode_residual < 1e-12);
    s.exact("psi.identity", "psi'' = F(psi) as rational functions of w", psi.identity_exact ? "exact" : "mismatch", psi.identity_exact);
    s.exact("psi.energy", "orbit energy is constant", psi.energy.str(), psi.energy_constant);

    // Control: the cubic coefficient perturbed by 1/100 must be detected.
    DiagonalSystem bad = diagonal_reduce(taylor_truncate(3));
    bad.potential += ExactPoly::monomial(FieldElement::rational(1, 100), 3);
    const auto ctrl = verify_phi(bad, Rational(2), {}, bits);
    const bool detected = !(ctrl.energy_residual < 1e-10);
    s.data() = {{"phi", phis},
                {"psi", {{"ode_residual", number(psi.ode_residual)}, {"energy_residual", number(psi.energy_residual)},
                         {"w_relation_residual", number(psi.w_relation_residual)}, {"energy", dyson::to_json(psi.energy)},
                         {"acceleration", psi.acceleration.str()}}},
                {"control", {{"description", "cubic coefficient shifted by 1/100, h = 2"},
                             {"energy_residual", number(ctrl.energy_residual)},
                             {"tolerance", number(1e-10)},
                             {"status", detected ? FAIL : PASS},
                             {"expected", FAIL}}}};
    s.check("control", "corrupted potential is rejected", ctrl.energy_residual, 1e-10, detected);
    return s.finish();
}

json nve(const PipelineConfig &cfg)
{
    Section s("nve");
    json truncs = json::object();
    for (int order : {3, 4}) {
        const std::string tname = order == 3 ? "K" : "Lambda";
        const auto vs = derive_variational(taylor_truncate(order));
        json modes = json::array();
        for (Mode m : {Mode::symmetric, Mode::antisymmetric}) {
            const auto sc = scalar_nve(vs, m);
            const auto fo = nve_flow_oracle(vs, sc);
            json entry = dyson::to_json(sc);
            entry["flow_oracle"] = {{"deviation", number(fo.deviation)}, {"monodromy_det", number(fo.monodromy_det)},
                                    {"wronskian_drift", number(fo.wronskian_drift)}, {"base_period", number(fo.base_period)}};
            const std::string id = tname + "." + to_string(m);
            s.check(id + ".deviation", "scalar NVE vs 4D variational flow", fo.deviation, 1e-6, fo.deviation < 1e-6);
            s.check(id + ".det", "|det monodromy - 1|", std::abs(fo.monodromy_det - 1), 1e-8, std::abs(fo.monodromy_det - 1) < 1e-8);
            s.check(id + ".wronskian", "Wronskian drift", fo.wronskian_drift, 1e-8, fo.wronskian_drift < 1e-8);
            if (order == 3) {
                entry["elliptic"] = dyson::to_json(substitute_elliptic(sc));
            } else if (cfg.runs_variant("derived")) {
                const auto ode = algebrize(sc);
                entry["algebrized"] = dyson::to_json(ode);
                s.exact(id + ".normal_form", "normal form agrees with the independent closed form",
                        ode.normal_form_identity ? "yes" : "no", ode.normal_form_identity);
            }
            modes.push_back(entry);
        }
        truncs[tname] = modes;
    }
    if (cfg.runs_variant("printed")) {
        const auto pr = printed_nve_quartic();
        const auto ode = algebrize(pr);
        json entry = dyson::to_json(pr);
        entry["algebrized"] = dyson::to_json(ode);
        truncs["Lambda_printed"] = entry;
        s.exact("Lambda.printed.normal_form", "normal form agrees with the independent closed form",
                ode.normal_form_identity ? "yes" : "no", ode.normal_form_identity);
    }
    s.data() = truncs;
    return s.finish();
}

json kovacic_section(const PipelineConfig &cfg)
{
    Section s("kovacic");
    json analyses = json::array();
    json evidence = json::array();
    const Rational g2(4, 3), g3(4, 27); // h = 1
    auto sieve = [&](const std::string &id, const std::string &variant, Mode mode, const FieldElement &A, const FieldElement &B) {
        const auto sv = lame_sieve({*A.as_rational(), *B.as_rational(), g2, g3});
        analyses.push_back({{"id", id}, {"kind", "lame_sieve"}, {"result", dyson::to_json(sv)}});
        evidence.push_back(to_json(evidence_from(sv, id, "K", variant, to_string(mode))));
    };
    auto kov = [&](const std::string &id, const std::string &variant, Mode mode, const RationalFunction &r) {
        const auto v = kovacic(r);
        analyses.push_back({{"id", id}, {"kind", "kovacic"}, {"r", r.str()}, {"result", to_json(v)}});
        evidence.push_back(to_json(evidence_from(v, id, "Lambda", variant, to_string(mode))));
        if (v.outcome == KovacicOutcome::indeterminate) {
            s.status_check(id + ".outcome", "Kovacic outcome", to_string(v.outcome) + ": " + v.indeterminate_reason, INDET);
            return;
        }
        bool verified = true;
        for (const auto &c : v.certificates) verified = verified && c.verified;
        s.exact(id + ".outcome", "Kovacic outcome; certificates re-substitute exactly", to_string(v.outcome), verified);
    };
    if (cfg.runs_variant("derived")) {
        const auto K = derive_variational(taylor_truncate(3));
        for (Mode m : {Mode::symmetric, Mode::antisymmetric}) {
            const auto e = substitute_elliptic(scalar_nve(K, m));
            sieve("K.derived." + to_string(m), "derived", m, e.A, e.B);
        }
        const auto L = derive_variational(taylor_truncate(4));
        for (Mode m : {Mode::symmetric, Mode::antisymmetric})
            kov("Lambda.derived." + to_string(m), "derived", m, algebrize(scalar_nve(L, m)).r);
    }
    if (cfg.runs_variant("printed")) {
        const EllipticForm printed;
        sieve("K.printed.antisymmetric", "printed", Mode::antisymmetric, printed.printed_A, printed.printed_B);
        kov("Lambda.printed.symmetric", "printed", Mode::symmetric, algebrize(printed_nve_quartic()).r);
    }
    s.data() = {{"analyses", analyses}, {"evidence", evidence}, {"lame_h", 1}};
    return s.finish();
}

Evidence evidence_from_json(const json &j)
{
    Evidence e;
    e.id = j.at("id");
    e.truncation = j.at("truncation");
    e.variant = j.at("variant");
    e.mode = j.at("mode");
    e.kind = j.at("kind");
    e.outcome = j.at("outcome");
    e.obstructs = j.at("obstructs");
    e.indeterminate = j.at("indeterminate");
    return e;
}

json verdicts_section(const json &kov)
{
    Section s("verdicts");
    std::vector<Evidence> ev;
    for (const auto &e : kov.at("data").at("evidence")) ev.push_back(evidence_from_json(e));
    json list = json::array();
    std::map<std::string, std::string> lambda_by_variant;
    for (const auto &v : verdict_report(ev)) {
        list.push_back(to_json(v));
        const std::string id = v.truncation + "." + v.variant;
        const std::string st = v.status == Integrability::non_integrable ? PASS : v.status == Integrability::indeterminate ? INDET : FAIL;
        s.status_check(id, "no additional meromorphic first integral", to_string(v.status), st);
        if (v.truncation == "Lambda") lambda_by_variant[v.variant] = to_string(v.status);
    }
    json notes = json::array();
    if (lambda_by_variant.size() == 2 && lambda_by_variant["derived"] != lambda_by_variant["printed"])
        notes.push_back("Lambda verdicts differ between the derived and printed coefficients");
    for (const auto &e : ev)
        if (e.kind == "kovacic" && e.variant == "derived" && e.mode == "symmetric" && !e.obstructs)
            notes.push_back("derived symmetric Lambda mode is the tangential variation and is Liouvillian (" + e.outcome +
                            "); the obstruction comes from the antisymmetric mode");
    s.data() = {{"verdicts", list}, {"notes", notes}};
    return s.finish();
}

json claim(const std::string &id, const std::string &text, const std::vector<std::string> &needs, const json &sections)
{
    std::vector<std::string> missing;
    std::string st = PASS;
    for (const auto &n : needs) {
        if (!sections.contains(n)) missing.push_back(n);
        else st = worse(st, sections.at(n).at("status").get<std::string>());
    }
    std::string status;
    if (rank(st) == 2) status = "not reproduced";
    else if (rank(st) == 1) status = "indeterminate";
    else if (!missing.empty()) status = "partial";
    else status = "evidence reproduced";
    return {{"id", id}, {"claim", text}, {"evidence_sections", needs}, {"missing", missing}, {"status", status}};
}

} // namespace

GridSpec parse_grid(const std::string &text)
{
    GridSpec g;
    std::istringstream is(text);
    std::string a, b, c;
    if (!std::getline(is, a, ',') || !std::getline(is, b, ',') || !std::getline(is, c) || c.find(',') != std::string::npos)
        throw UsageError("grid must be min,max,count: " + text);
    try {
        std::size_t pa = 0, pb = 0, pc = 0;
        g.min_offset = std::stod(a, &pa);
        g.max_offset = std::stod(b, &pb);
        g.count = std::stoi(c, &pc);
        if (pa != a.size() || pb != b.size() || pc != c.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception &) {
        throw UsageError("grid must be min,max,count: " + text);
    }
    return g;
}

std::string to_string(const GridSpec &g)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%d", g.min_offset, g.max_offset, g.count);
    return buf;
}

void PipelineConfig::validate() const
{
    if (precision < 53 || precision > 4096) throw UsageError("precision must be in [53, 4096] bits");
    if (!(tol > 0)) throw UsageError("tol must be positive");
    if (!(grid.min_offset > 0) || !(grid.max_offset > grid.min_offset)) throw UsageError("grid needs 0 < min < max");
    if (grid.count < 2) throw UsageError("grid count must be at least 2");
    if (!(monodromy_radius > 0)) throw UsageError("monodromy radius must be positive");
    if (monodromy_steps < 16) throw UsageError("monodromy steps must be at least 16");
    if (variant != "printed" && variant != "derived" && variant != "both") throw UsageError("variant must be printed, derived or both");
    for (const auto &k : skip)
        if (std::find(section_names().begin(), section_names().end(), k) == section_names().end())
            throw UsageError("unknown section in skip: " + k);
}

bool PipelineConfig::skipped(const std::string &section) const
{
    return std::find(skip.begin(), skip.end(), section) != skip.end();
}

json to_json(const PipelineConfig &c)
{
    return {{"precision", c.precision},
            {"tol", number(c.tol)},
            {"grid", to_string(c.grid)},
            {"monodromy_radius", number(c.monodromy_radius)},
            {"monodromy_steps", c.monodromy_steps},
            {"variant", c.variant},
            {"skip", c.skip}};
}

const std::vector<std::string> &section_names()
{
    static const std::vector<std::string> names{"equilibrium",      "truncations", "turning_points", "period_scan", "monodromy",
                                                "verify_solutions", "nve",         "kovacic",        "verdicts"};
    return names;
}

json run_section(const std::string &name, const PipelineConfig &cfg)
{
    if (name == "equilibrium") return equilibrium(cfg);
    if (name == "truncations") return truncations(cfg);
    if (name == "turning_points") return turning_points(cfg);
    if (name == "period_scan") return period_section(cfg);
    if (name == "monodromy") return monodromy(cfg);
    if (name == "verify_solutions") return verify_solutions(cfg);
    if (name == "nve") return nve(cfg);
    if (name == "kovacic") return kovacic_section(cfg);
    if (name == "verdicts") throw UsageError("the verdicts section is derived from kovacic during assembly");
    throw UsageError("unknown section: " + name);
}

json assemble_report(const PipelineConfig &cfg, const std::map<std::string, json> &sections)
{
    json secs = json::object();
    json gaps = json::array();
    for (const auto &name : section_names()) {
        if (name == "verdicts") {
            if (secs.contains("kovacic")) secs["verdicts"] = verdicts_section(secs["kovacic"]);
            else gaps.push_back("verdicts");
            continue;
        }
        const auto it = sections.find(name);
        if (it == sections.end()) gaps.push_back(name);
        else secs[name] = it->second;
    }
    json claims = json::array();
    claims.push_back(claim("analytic", "not integrable by means of analytic first integrals",
                           {"equilibrium", "turning_points", "period_scan", "monodromy"}, secs));
    claims.push_back(claim("formal", "not formally integrable",
                           {"truncations", "verify_solutions", "nve", "kovacic", "verdicts"}, secs));
    std::string st = PASS;
    for (const auto &[k, v] : secs.items()) st = worse(st, v.at("status").get<std::string>());
    return {{"schema_version", schema_version},
            {"generator", "dyson-galois"},
            {"config", to_json(cfg)},
            {"sections", secs},
            {"gaps", gaps},
            {"claims", claims},
            {"status", st}};
}

json build_report(const PipelineConfig &cfg)
{
    cfg.validate();
    std::map<std::string, json> sections;
    for (const auto &name : section_names()) {
        if (name == "verdicts" || cfg.skipped(name)) continue;
        sections[name] = run_section(name, cfg);
    }
    return assemble_report(cfg, sections);
}

std::vector<std::string> validate_report(const json &r)
{
    std::vector<std::string> err;
    auto need = [&](const json &obj, const std::string &key, json::value_t type, const std::string &where) {
        if (!obj.is_object() || !obj.contains(key)) {
            err.push_back(where + ": missing " + key);
            return false;
        }
        if (obj.at(key).type() != type && !(type == json::value_t::number_integer && obj.at(key).is_number_integer())) {
            err.push_back(where + ": wrong type for " + key);
            return false;
        }
        return true;
    };
    const std::set<std::string> statuses{PASS, FAIL, INDET};
    need(r, "schema_version", json::value_t::string, "report");
    if (r.contains("schema_version") && r["schema_version"] != schema_version) err.push_back("report: unsupported schema_version");
    need(r, "config", json::value_t::object, "report");
    need(r, "gaps", json::value_t::array, "report");
    need(r, "claims", json::value_t::array, "report");
    if (need(r, "status", json::value_t::string, "report") && !statuses.count(r["status"])) err.push_back("report: bad status");
    std::set<std::string> evidence_ids;
    if (need(r, "sections", json::value_t::object, "report")) {
        for (const auto &[name, sec] : r["sections"].items()) {
            if (std::find(section_names().begin(), section_names().end(), name) == section_names().end())
                err.push_back("sections: unknown section " + name);
            const std::string where = "sections." + name;
            if (need(sec, "status", json::value_t::string, where) && !statuses.count(sec["status"])) err.push_back(where + ": bad status");
            need(sec, "data", json::value_t::object, where);
            if (need(sec, "checks", json::value_t::array, where)) {
                for (const auto &c : sec["checks"]) {
                    for (const char *k : {"id", "description", "value", "tolerance", "status"})
                        if (!c.contains(k)) err.push_back(where + ": check missing " + k);
                    if (c.contains("status") && !statuses.count(c["status"])) err.push_back(where + ": bad check status");
                }
            }
        }
        if (r["sections"].contains("kovacic"))
            for (const auto &e : r["sections"]["kovacic"]["data"].value("evidence", json::array())) evidence_ids.insert(e.value("id", ""));
        if (r["sections"].contains("verdicts"))
            for (const auto &v : r["sections"]["verdicts"]["data"].value("verdicts", json::array()))
                for (const auto &id : v.value("evidence", json::array()))
                    if (!evidence_ids.count(id.get<std::string>())) err.push_back("verdicts: unknown evidence id " + id.get<std::string>());
    }
    return err;
}

std::string render_json(const json &doc) { return doc.dump(2) + "\n"; }

namespace {
std::string cell(const json &v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}
} // namespace

std::string render_markdown(const json &r)
{
    std::ostringstream md;
    md << "# dyson-galois report\n\n";
    md << "Schema " << r.value("schema_version", "?") << ", overall status **" << r.value("status", "?") << "**.\n\n";
    md << "## Claims\n\n| claim | status | missing evidence |\n|---|---|---|\n";
    for (const auto &c : r.value("claims", json::array())) {
        std::string miss;
        for (const auto &m : c["missing"]) miss += (miss.empty() ? "" : ", ") + m.get<std::string>();
        md << "| " << cell(c["claim"]) << " | " << cell(c["status"]) << " | " << (miss.empty() ? "none" : miss) << " |\n";
    }
    const auto gaps = r.value("gaps", json::array());
    if (!gaps.empty()) {
        md << "\nMissing sections:";
        for (const auto &g : gaps) md << ' ' << g.get<std::string>();
        md << "\n";
    }
    for (const auto &name : section_names()) {
        if (!r["sections"].contains(name)) continue;
        const auto &sec = r["sections"][name];
        md << "\n## " << name << " (" << sec["status"].get<std::string>()
           << ")\n\n| id | check | value | tolerance | status |\n|---|---|---|---|---|\n";
        for (const auto &c : sec["checks"]) {
            md << "| " << cell(c["id"]) << " | " << cell(c["description"]) << " | " << cell(c["value"]) << " | "
               << cell(c["tolerance"]) << " | " << cell(c["status"]) << " |\n";
        }
        if (name == "verdicts")
            for (const auto &n : sec["data"]["notes"]) md << "\nNote: " << n.get<std::string>() << "\n";
    }
    return md.str();
}

int exit_code(const json &doc)
{
    const std::string st = doc.value("status", std::string(FAIL));
    return st == FAIL ? 1 : st == INDET ? 2 : 0;
}

json number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

} // namespace dyson::report
