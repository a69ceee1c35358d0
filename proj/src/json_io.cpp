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

#include "p2q/json_io.hpp"

namespace p2q {

using nlohmann::json;

json cayley_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (int i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.order(); ++j)
      row.push_back(g.mul(static_cast<elem_t>(i), static_cast<elem_t>(j)));
    table.push_back(std::move(row));
  }
  json out{{"order", g.order()}, {"identity", g.identity()}, {"table", std::move(table)}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

FiniteGroup cayley_from_json(const json& j, AssocCheck check) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw ConditionError("cayley json: expected {\"order\", \"identity\", \"table\"}");
  int n = 0;
  try {
    n = j.at("order").get<int>();
  } catch (const json::exception&) {
    throw ConditionError("cayley json: order must be an integer");
  }
  if (n <= 0 || n > kMaxTableOrder)
    throw ConditionError("cayley json: order out of range");
  const json& rows = j.at("table");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw ConditionError("cayley json: table must have `order` rows");
  std::vector<elem_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ConditionError("cayley json: each row must have `order` entries");
    for (const json& v : row) {
      if (!v.is_number_integer()) throw ConditionError("cayley json: entries must be integers");
      long long x = v.get<long long>();
      if (x < 0 || x >= n) throw ConditionError("cayley json: entry out of range");
      flat.push_back(static_cast<elem_t>(x));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& ls = j.at("labels");
    if (!ls.is_array() || ls.size() != static_cast<std::size_t>(n))
      throw ConditionError("cayley json: labels must have `order` entries");
    for (const json& l : ls) labels.push_back(l.get<std::string>());
  }
  FiniteGroup g(std::move(flat), n, std::move(labels), check);
  if (j.contains("identity")) {
    long long e = j.at("identity").get<long long>();
    if (e != g.identity())
      throw ConditionError("cayley json: declared identity " + std::to_string(e) +
                           " is not the table identity " + std::to_string(g.identity()));
  }
  return g;
}

json spec_to_json(const GroupSpec& spec) {
  json out{{"type", spec.type}, {"p", spec.p}, {"q", spec.q}};
  if (spec.s) out["s"] = *spec.s;
  return out;
}

GroupSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("p") || !j.contains("q"))
    throw ConditionError("spec json: expected {\"type\", \"p\", \"q\", \"s\"?}");
  GroupSpec spec;
  try {
    spec.type = j.at("type").get<int>();
    spec.p = j.at("p").get<int>();
    spec.q = j.at("q").get<int>();
    if (j.contains("s")) spec.s = j.at("s").get<int>();
  } catch (const json::exception& e) {
    throw ConditionError(std::string("spec json: ") + e.what());
  }
  return spec;
}

json report_to_json(const VerifyReport& rep, bool include_millis) {
  json out{{"spec", spec_to_json(rep.spec)},
           {"brute_order", rep.brute_order},
           {"predicted_order", rep.predicted_order},
           {"level", rep.level == VerifyLevel::kOrder ? "order" : "isomorphism"},
           {"pass", rep.pass}};
  if (rep.extension_row) out["extension_row"] = true;
  if (include_millis) out["millis"] = rep.millis;
  return out;
}

json triangular_to_json(const TriangularAut& t) {
  return json{{"a", t.a}, {"d", t.d}, {"b", t.b}};
}

TriangularAut triangular_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("d") || !j.contains("b"))
    throw ConditionError("triple json: expected {\"a\", \"d\", \"b\"}");
  TriangularAut t;
  try {
    t.a = j.at("a").get<std::vector<elem_t>>();
    t.d = j.at("d").get<std::vector<elem_t>>();
    t.b = j.at("b").get<std::vector<elem_t>>();
  } catch (const json::exception& e) {
    throw ConditionError(std::string("triple json: ") + e.what());
  }
  return t;
}

}  // namespace p2q
