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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "dyson/report/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dyson::report;

namespace {

void write_file(const fs::path &p, const std::string &text)
{
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    os << text;
}

void print_section(const json &sec)
{
    std::cout << sec["name"].get<std::string>() << ": " << sec["status"].get<std::string>() << "\n";
    for (const auto &c : sec["checks"]) {
        auto str = [](const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        std::cout << "  [" << c["status"].get<std::string>() << "] " << c["id"].get<std::string>() << " = " << str(c["value"])
                  << " (tol " << str(c["tolerance"]) << ")\n";
    }
}

void save_section(const PipelineConfig &cfg, const json &sec)
{
    const fs::path dir(cfg.out);
    const std::string name = sec["name"];
    write_file(dir / (name + ".json"), render_json(sec));
    if (name == "period_scan") write_file(dir / "period_scan.csv", sec["data"]["csv"].get<std::string>());
}

int run_sections(const PipelineConfig &cfg, const std::vector<std::string> &names)
{
    cfg.validate();
    fs::create_directories(cfg.out);
    std::map<std::string, json> done;
    for (const auto &n : names) {
        const json sec = run_section(n, cfg);
        save_section(cfg, sec);
        print_section(sec);
        done[n] = sec;
    }
    if (done.count("kovacic")) {
        const json verdicts = assemble_report(cfg, done)["sections"]["verdicts"];
        save_section(cfg, verdicts);
        print_section(verdicts);
        done["verdicts"] = verdicts;
    }
    // FAIL (1) outranks INDETERMINATE (2).
    bool any_fail = false, any_indet = false;
    for (const auto &[k, s] : done) {
        any_fail |= exit_code(s) == 1;
        any_indet |= exit_code(s) == 2;
    }
    return any_fail ? 1 : any_indet ? 2 : 0;
}

int run_report(const PipelineConfig &cfg, bool reuse)
{
    cfg.validate();
    fs::create_directories(cfg.out);
    json report;
    if (reuse) {
        std::map<std::string, json> sections;
        for (const auto &n : section_names()) {
            const fs::path p = fs::path(cfg.out) / (n + ".json");
            if (n == "verdicts" || cfg.skipped(n) || !fs::exists(p)) continue;
            std::ifstream is(p);
            sections[n] = json::parse(is);
        }
        report = assemble_report(cfg, sections);
    } else {
        report = build_report(cfg);
        for (const auto &[n, sec] : report["sections"].items()) save_section(cfg, sec);
    }
    const auto errors = validate_report(report);
    for (const auto &e : errors) std::cerr << "schema: " << e << "\n";
    const std::string text = render_json(report);
    if (json::parse(text) != report) {
        std::cerr << "schema: report does not round-trip\n";
        return 1;
    }
    write_file(fs::path(cfg.out) / "report.json", text);
    write_file(fs::path(cfg.out) / "report.md", render_markdown(report));
    for (const auto &[n, sec] : report["sections"].items()) print_section(sec);
    for (const auto &g : report["gaps"]) std::cout << "missing section: " << g.get<std::string>() << "\n";
    for (const auto &c : report["claims"])
        std::cout << "claim: " << c["claim"].get<std::string>() << ": " << c["status"].get<std::string>() << "\n";
    if (!errors.empty()) return 1;
    return exit_code(report);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Period function, variational equations and Kovacic analysis of the three-particle Dyson model"};
    app.set_config("--config", "", "Flat key=value file; command-line flags override it");
    app.fallthrough();
    app.require_subcommand(1);

    PipelineConfig cfg;
    std::string grid = to_string(cfg.grid);
    app.add_option("--precision", cfg.precision, "Working precision in bits")->capture_default_str();
    app.add_option("--tol", cfg.tol, "Quadrature tolerance")->capture_default_str();
    app.add_option("--grid", grid, "Energy offsets above E_min: min,max,count")->capture_default_str();
    app.add_option("--variant", cfg.variant, "NVE coefficients: printed, derived or both")->capture_default_str();
    app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
    app.add_option("--monodromy-radius", cfg.monodromy_radius, "Loop radius around c*")->capture_default_str();
    app.add_option("--monodromy-steps", cfg.monodromy_steps, "Steps per loop")->capture_default_str();
    app.add_option("--skip", cfg.skip, "Sections left out of the report")->delimiter(',');

    const std::map<std::string, std::vector<std::string>> commands{
        {"period-scan", {"period_scan"}},
        {"turning-points", {"equilibrium", "turning_points"}},
        {"monodromy", {"monodromy"}},
        {"taylor", {"truncations"}},
        {"verify-solutions", {"verify_solutions"}},
        {"nve", {"nve"}},
        {"kovacic", {"kovacic"}},
    };
    const std::map<std::string, std::string> help{
        {"period-scan", "Period table over the energy grid (CSV and JSON)"},
        {"turning-points", "Closed-form vs numeric turning points"},
        {"monodromy", "Branch tracking around c*"},
        {"taylor", "Exact Taylor truncations"},
        {"verify-solutions", "Residuals of the elliptic and rational solutions"},
        {"nve", "Normal variational equations and flow oracle"},
        {"kovacic", "Lame sieve, Kovacic algorithm and verdicts"},
    };
    for (const auto &[name, secs] : commands) app.add_subcommand(name, help.at(name));
    auto *rep = app.add_subcommand("report", "Run everything (or merge saved sections) into report.json and report.md");
    bool reuse = false;
    rep->add_flag("--reuse", reuse, "Merge section files already in the output directory");

    try {
        app.parse(argc, argv);
        cfg.grid = parse_grid(grid);
        cfg.validate();
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 3;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (rep->parsed()) return run_report(cfg, reuse);
        for (const auto &[name, secs] : commands)
            if (app.got_subcommand(name)) return run_sections(cfg, secs);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
