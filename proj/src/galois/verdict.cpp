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

#include "dyson/galois/verdict.hpp"

#include <map>
#include <utility>

namespace dyson {

Evidence evidence_from(const LameSieve &s, std::string id, std::string truncation, std::string variant, std::string mode)
{
    Evidence e{std::move(id), std::move(truncation), std::move(variant), std::move(mode), "lame_sieve", "", false, false};
    e.obstructs = s.non_commutative();
    e.outcome = e.obstructs ? "all families fail" : "some family admissible";
    return e;
}

Evidence evidence_from(const KovacicVerdict &v, std::string id, std::string truncation, std::string variant, std::string mode)
{
    Evidence e{std::move(id), std::move(truncation), std::move(variant), std::move(mode), "kovacic", to_string(v.outcome), false, false};
    e.obstructs = v.outcome == KovacicOutcome::not_liouvillian;
    e.indeterminate = v.outcome == KovacicOutcome::indeterminate;
    return e;
}

std::string to_string(Integrability v)
{
    switch (v) {
    case Integrability::non_integrable: return "non-integrable";
    case Integrability::inconclusive: return "inconclusive";
    case Integrability::indeterminate: return "indeterminate";
    }
    return "?";
}

std::vector<TruncationVerdict> verdict_report(const std::vector<Evidence> &evidence)
{
    std::map<std::pair<std::string, std::string>, std::vector<const Evidence *>> groups;
    for (const auto &e : evidence) groups[{e.truncation, e.variant}].push_back(&e);
    std::vector<TruncationVerdict> out;
    for (const auto &[key, items] : groups) {
        TruncationVerdict v;
        v.truncation = key.first;
        v.variant = key.second;
        bool any_indeterminate = false, any_obstruction = false;
        for (const auto *e : items) {
            v.evidence_ids.push_back(e->id);
            any_indeterminate |= e->indeterminate;
            any_obstruction |= e->obstructs;
        }
        if (any_indeterminate) {
            v.status = Integrability::indeterminate;
            v.statement = "an analysis was indeterminate";
        } else if (any_obstruction) {
            v.status = Integrability::non_integrable;
            v.statement = "no additional meromorphic first integral";
        } else {
            v.status = Integrability::inconclusive;
            v.statement = "no obstruction found; necessary conditions only";
        }
        out.push_back(std::move(v));
    }
    return out;
}

nlohmann::json to_json(const Evidence &e)
{
    return {{"id", e.id},     {"truncation", e.truncation}, {"variant", e.variant},     {"mode", e.mode},
            {"kind", e.kind}, {"outcome", e.outcome},       {"obstructs", e.obstructs}, {"indeterminate", e.indeterminate}};
}

nlohmann::json to_json(const TruncationVerdict &v)
{
    return {{"truncation", v.truncation},
            {"variant", v.variant},
            {"status", to_string(v.status)},
            {"statement", v.statement},
            {"evidence", v.evidence_ids}};
}

} // namespace dyson
