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

#include <optional>
#include <string>
#include <vector>

#include "p2q/finite_group.hpp"

namespace p2q {

// Strict-paper mode is exactly the eleven table rows; complete mode also
// admits the type-7 row with q = 2 (scalar -1 action), which no other row
// realizes, restoring exhaustiveness at orders 2 p^2.
enum class TableMode { kStrictPaper, kComplete };

// One row of the classification table at concrete primes, plus the type-8
// eigenvalue-exponent parameter s.
struct GroupSpec {
  int type = 0;     // 1..11
  int p = 0;        // the squared prime
  int q = 0;        // the other prime
  std::optional<int> s;  // present iff type == 8

  bool operator==(const GroupSpec&) const = default;
};

// Throws ConditionError naming the failed divisibility/range. When
// require_canonical_s is set, type-8 specs must carry s <= s^{-1} mod q;
// builders accept any admissible s, enumerate/classify emit canonical ones.
void validate_spec(const GroupSpec& spec, TableMode mode = TableMode::kComplete,
                   bool require_canonical_s = false);

// min(s, s^{-1} mod q) over residues in 2..q-2; rejects s in {0, 1, -1}.
int canonical_s(int s, int q);

FiniteGroup build(const GroupSpec& spec);

// The H (normal factor) / K presentation behind build(), with the action used;
// for the direct-product rows (1, 5, 6, 11) the action is trivial.
struct CatalogBuild {
  GroupSpec spec;
  FiniteGroup group;  // H-major product of h and k
  FiniteGroup h;
  FiniteGroup k;
  ActionSpec action;
};
CatalogBuild build_parts(const GroupSpec& spec);

// One spec per isomorphism class, ascending by type then canonical s.
std::vector<GroupSpec> enumerate_specs(int p, int q, TableMode mode = TableMode::kComplete);

// The unique spec with build(spec) isomorphic to g; |g| must be p^2 q.
// A q = 2 scalar-action group reports the completeness-extension row
// {type 7, q = 2} regardless of mode.
GroupSpec classify(const FiniteGroup& g);

// Paper-table metadata for rendering.
std::string condition_string(int type);
std::string group_structure_string(int type);

}  // namespace p2q
