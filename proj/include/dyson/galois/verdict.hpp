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

#ifndef DYSON_GALOIS_VERDICT_HPP
#define DYSON_GALOIS_VERDICT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "dyson/galois/kovacic.hpp"
#include "dyson/galois/lame.hpp"

namespace dyson {

/// One analysis feeding a verdict.
struct Evidence {
    std::string id;
    std::string truncation; // "K" or "Lambda"
    std::string variant;    // "derived" or "printed"
    std::string mode;
    std::string kind;       // "lame_sieve" or "kovacic"
    std::string outcome;
    /// The identity component of the Galois group is not commutative.
    bool obstructs = false;
    bool indeterminate = false;
};

Evidence evidence_from(const LameSieve &s, std::string id, std::string truncation, std::string variant, std::string mode);
Evidence evidence_from(const KovacicVerdict &v, std::string id, std::string truncation, std::string variant, std::string mode);

enum class Integrability { non_integrable, inconclusive, indeterminate };
std::string to_string(Integrability v);

struct TruncationVerdict {
    std::string truncation, variant;
    Integrability status = Integrability::inconclusive;
    std::string statement;
    std::vector<std::string> evidence_ids;
};

/// Groups evidence by (truncation, variant). Any indeterminate input makes
/// the group indeterminate; otherwise one obstruction suffices for
/// "no additional meromorphic first integral".
std::vector<TruncationVerdict> verdict_report(const std::vector<Evidence> &evidence);

nlohmann::json to_json(const Evidence &e);
nlohmann::json to_json(const TruncationVerdict &v);

} // namespace dyson

#endif
