// Copyright 2026 The p2qaut Authors
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

#pragma once

#include <json.hpp>

#include "p2q/aut.hpp"
#include "p2q/catalog.hpp"
#include "p2q/finite_group.hpp"
#include "p2q/triangular.hpp"

namespace p2q {

// {"order": n, "identity": e, "table": [[...]]}, 0-based, row times column;
// an optional "labels" array round-trips.
nlohmann::json cayley_to_json(const FiniteGroup& g);
FiniteGroup cayley_from_json(const nlohmann::json& j,
                             AssocCheck check = AssocCheck::kAuto);

// {"type": t, "p": p, "q": q, "s": s?}
nlohmann::json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const nlohmann::json& j);

// {"spec": ..., "brute_order": n, "predicted_order": m, "level": "...",
//  "pass": bool, "millis": t?}; millis only when include_millis is set so
// data-mode output stays byte-identical across runs.
nlohmann::json report_to_json(const VerifyReport& rep, bool include_millis);

// {"a": [...], "d": [...], "b": [...]} with element-index arrays.
nlohmann::json triangular_to_json(const TriangularAut& t);
TriangularAut triangular_from_json(const nlohmann::json& j);

}  // namespace p2q
