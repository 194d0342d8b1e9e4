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

#ifndef DYSON_REPORT_REPORT_HPP
#define DYSON_REPORT_REPORT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace dyson::report {

inline constexpr const char *schema_version = "1.0";

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Energy offsets above E_min: `count` evenly spaced values in [min, max].
struct GridSpec {
    double min_offset = 1e-6, max_offset = 5.0;
    int count = 20;
};
/// "min,max,count".
GridSpec parse_grid(const std::string &text);
std::string to_string(const GridSpec &g);

struct PipelineConfig {
    int precision = 128;
    double tol = 1e-10;
    GridSpec grid;
    double monodromy_radius = 1e-3;
    int monodromy_steps = 2000;
    /// "printed", "derived" or "both".
    std::string variant = "both";
    std::string out = "dyson-out";
    std::vector<std::string> skip;

    /// Throws UsageError.
    void validate() const;
    bool runs_variant(const std::string &v) const { return variant == "both" || variant == v; }
    bool skipped(const std::string &section) const;
};

nlohmann::json to_json(const PipelineConfig &c);

/// Section names in report order. "verdicts" is derived from "kovacic".
const std::vector<std::string> &section_names();

/// Computes one section: {"name", "status", "checks", "data"}. Status is
/// "PASS", "FAIL" or "INDETERMINATE".
nlohmann::json run_section(const std::string &name, const PipelineConfig &cfg);

/// Merges computed sections, derives the verdicts and the two claims, and
/// lists missing sections under "gaps".
nlohmann::json assemble_report(const PipelineConfig &cfg, const std::map<std::string, nlohmann::json> &sections);

/// Runs every section not skipped and assembles the report.
nlohmann::json build_report(const PipelineConfig &cfg);

/// Structural checks; empty when valid.
std::vector<std::string> validate_report(const nlohmann::json &report);

/// Two-space indented JSON with a trailing newline.
std::string render_json(const nlohmann::json &doc);
std::string render_markdown(const nlohmann::json &report);

/// 0 PASS, 1 any FAIL, 2 any INDETERMINATE (FAIL wins).
int exit_code(const nlohmann::json &doc);

/// 12 significant digits; non-finite values become "inf", "-inf", "nan".
nlohmann::json number(double v);

} // namespace dyson::report

#endif
