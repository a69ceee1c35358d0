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

#include <doctest.h>

#include "p2q/json_io.hpp"
#include "p2q/triangular.hpp"

using namespace p2q;
using nlohmann::json;

TEST_CASE("cayley table json round trip") {
  FiniteGroup g = build(GroupSpec{10, 2, 3, std::nullopt});
  json j = cayley_to_json(g);
  CHECK(j["order"] == 12);
  CHECK(j["identity"] == 0);
  FiniteGroup back = cayley_from_json(j);
  CHECK(back.flat_table() == g.flat_table());
  CHECK(classify(back) == GroupSpec{10, 2, 3, std::nullopt});

  // byte-identical re-serialization
  CHECK(cayley_to_json(back).dump() == j.dump());
}

TEST_CASE("labels round trip through json") {
  std::vector<elem_t> t = {0, 1, 1, 0};
  FiniteGroup g(t, 2, {"e", "a"});
  json j = cayley_to_json(g);
  CHECK(j["labels"] == std::vector<std::string>{"e", "a"});
  CHECK(cayley_from_json(j).labels() == g.labels());
}

TEST_CASE("cayley json rejects malformed input") {
  CHECK_THROWS_AS(cayley_from_json(json::parse("{}")), ConditionError);
  CHECK_THROWS_AS(cayley_from_json(json::parse(R"({"order": 2, "table": [[0,1]]})")),
                  ConditionError);
  CHECK_THROWS_AS(cayley_from_json(json::parse(R"({"order": 2, "table": [[0,1],[1,5]]})")),
                  ConditionError);
  CHECK_THROWS_AS(
      cayley_from_json(json::parse(R"({"order": 2, "identity": 1, "table": [[0,1],[1,0]]})")),
      ConditionError);
  // Latin but non-associative
  CHECK_THROWS_AS(cayley_from_json(json::parse(
                      R"({"order": 5, "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})")),
                  ConditionError);
}

TEST_CASE("spec json round trip") {
  GroupSpec s8{8, 11, 5, 2};
  CHECK(spec_from_json(spec_to_json(s8)) == s8);
  GroupSpec s4{4, 3, 2, std::nullopt};
  json j = spec_to_json(s4);
  CHECK_FALSE(j.contains("s"));
  CHECK(spec_from_json(j) == s4);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"type": 4})")), ConditionError);
}

TEST_CASE("verify report json") {
  VerifyReport rep = verify_table_row(GroupSpec{10, 2, 3, std::nullopt}, VerifyLevel::kIsomorphism);
  json j = report_to_json(rep, false);
  CHECK(j["pass"] == true);
  CHECK(j["brute_order"] == 24);
  CHECK(j["predicted_order"] == 24);
  CHECK(j["level"] == "isomorphism");
  CHECK_FALSE(j.contains("millis"));
  CHECK(report_to_json(rep, true).contains("millis"));
}

TEST_CASE("triangular certificate json round trip") {
  CatalogBuild parts = build_parts(GroupSpec{4, 3, 2, std::nullopt});
  SemidirectContext ctx = make_context(parts.group, parts.h, parts.k);
  AutGroup a = brute_aut(ctx.group);
  TriangularAut t = decompose_aut(a.elements[5], ctx);
  json j = triangular_to_json(t);
  TriangularAut back = triangular_from_json(j);
  CHECK(back.a == t.a);
  CHECK(back.d == t.d);
  CHECK(back.b == t.b);
  CHECK(triangular_to_aut(ctx, back).images == a.elements[5].images);
}
