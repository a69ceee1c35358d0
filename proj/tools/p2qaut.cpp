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

// Command-line front door: enumerate, build, classify, aut, verify, table.
// Exit codes: 0 success, 1 verification mismatch, 2 usage/condition error,
// 3 resource bound exceeded. Data goes to stdout, progress to stderr.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "p2q/aut.hpp"
#include "p2q/catalog.hpp"
#include "p2q/json_io.hpp"
#include "p2q/modular.hpp"

namespace {

using nlohmann::json;

int default_max_order() {
  if (const char* env = std::getenv("P2Q_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    std::cerr << "warning: ignoring unparsable P2Q_MAX_ORDER\n";
  }
  return 1000;
}

p2q::FiniteGroup read_cayley(const std::string& path, bool full_assoc) {
  json j;
  try {
    if (path.empty() || path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(path);
      if (!in) throw p2q::ConditionError("cannot open " + path);
      in >> j;
    }
  } catch (const json::exception& e) {
    throw p2q::ConditionError(std::string("invalid JSON input: ") + e.what());
  }
  return p2q::cayley_from_json(j, full_assoc ? p2q::AssocCheck::kFull : p2q::AssocCheck::kAuto);
}

p2q::GroupSpec spec_from_flags(int type, int p, int q, int s_flag, bool has_s) {
  p2q::GroupSpec spec{type, p, q, std::nullopt};
  if (has_s) spec.s = s_flag;
  p2q::validate_spec(spec, p2q::TableMode::kComplete);
  return spec;
}

std::string spec_line(const p2q::GroupSpec& spec) {
  std::string out = "type " + std::to_string(spec.type) + " p=" + std::to_string(spec.p) +
                    " q=" + std::to_string(spec.q);
  if (spec.s) out += " s=" + std::to_string(*spec.s);
  return out;
}

// All (p, q) pairs of distinct primes with p^2 q <= bound, ascending by (p, q).
std::vector<std::pair<int, int>> prime_pairs_up_to(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p * 2 <= bound; ++p) {
    if (!p2q::is_prime(p)) continue;
    for (int q = 2; static_cast<long long>(p) * p * q <= bound; ++q) {
      if (q == p || !p2q::is_prime(q)) continue;
      out.emplace_back(p, q);
    }
  }
  return out;
}

int cmd_enumerate(int p, int q, bool strict, bool as_json) {
  auto mode = strict ? p2q::TableMode::kStrictPaper : p2q::TableMode::kComplete;
  auto specs = p2q::enumerate_specs(p, q, mode);
  if (as_json) {
    json arr = json::array();
    for (const auto& spec : specs)
      arr.push_back(json{{"spec", p2q::spec_to_json(spec)},
                         {"group_order", static_cast<long long>(p) * p * q},
                         {"aut_order", p2q::predicted_aut_order(spec)},
                         {"aut_structure", p2q::predicted_aut_structure(spec)}});
    std::cout << arr.dump() << "\n";
  } else {
    std::printf("%-5s %-3s %-7s %-10s %s\n", "type", "s", "order", "aut_order", "aut_structure");
    for (const auto& spec : specs)
      std::printf("%-5d %-3s %-7lld %-10lld %s\n", spec.type,
                  spec.s ? std::to_string(*spec.s).c_str() : "-",
                  static_cast<long long>(p) * p * q, p2q::predicted_aut_order(spec),
                  p2q::predicted_aut_structure(spec).c_str());
  }
  return 0;
}

int cmd_build(const p2q::GroupSpec& spec) {
  std::cout << p2q::cayley_to_json(p2q::build(spec)).dump() << "\n";
  return 0;
}

int cmd_classify(const std::string& path, bool full_assoc, bool as_json) {
  p2q::FiniteGroup g = read_cayley(path, full_assoc);
  p2q::GroupSpec spec = p2q::classify(g);
  if (as_json)
    std::cout << p2q::spec_to_json(spec).dump() << "\n";
  else
    std::cout << spec_line(spec) << "  (" << p2q::group_structure_string(spec.type) << ")\n";
  return 0;
}

int cmd_aut(bool have_spec, const p2q::GroupSpec& spec, const std::string& path,
            bool full_assoc, bool as_json, int max_order) {
  p2q::FiniteGroup g = have_spec ? p2q::build(spec) : read_cayley(path, full_assoc);
  p2q::AutOptions opts;
  opts.max_group_order = max_order;
  p2q::AutGroup a = p2q::brute_aut(g, opts);
  if (as_json)
    std::cout << json{{"order", a.order}, {"materialized", a.materialized()}}.dump() << "\n";
  else
    std::cout << "automorphism group order " << a.order
              << (a.materialized() ? "" : " (count only)") << "\n";
  return 0;
}

int run_one_verify(const p2q::GroupSpec& spec, p2q::VerifyLevel level,
                   const p2q::VerifyOptions& opts, bool as_json, bool timing,
                   json* sink) {
  p2q::VerifyReport rep = p2q::verify_table_row(spec, level, opts);
  if (sink) {
    sink->push_back(p2q::report_to_json(rep, timing));
  } else if (as_json) {
    std::cout << p2q::report_to_json(rep, timing).dump() << "\n";
  } else {
    std::printf("%s %s: brute %lld predicted %lld (%s)%s\n", rep.pass ? "PASS" : "FAIL",
                spec_line(spec).c_str(), rep.brute_order, rep.predicted_order,
                rep.level == p2q::VerifyLevel::kOrder ? "order" : "isomorphism",
                rep.extension_row ? " [extension row, unasserted]" : "");
    if (timing) std::fprintf(stderr, "  %.1f ms\n", rep.millis);
  }
  return rep.pass ? 0 : 1;
}

int cmd_verify_all(int max_order, p2q::VerifyLevel level, const p2q::VerifyOptions& opts,
                   bool as_json, bool timing) {
  // Experiments on the q = 2 extension row are only run while the brute-force
  // count stays tractable.
  constexpr long long kExtensionCap = 5000000;
  json arr = json::array();
  bool all_pass = true;
  for (auto [p, q] : prime_pairs_up_to(max_order)) {
    auto strict = p2q::enumerate_specs(p, q, p2q::TableMode::kStrictPaper);
    auto complete = p2q::enumerate_specs(p, q, p2q::TableMode::kComplete);
    for (const auto& spec : complete) {
      bool extension = std::find(strict.begin(), strict.end(), spec) == strict.end();
      if (extension && p2q::predicted_aut_order(spec) > kExtensionCap) {
        std::cerr << "skipping extension row " << spec_line(spec)
                  << " (hypothesized automorphism count too large)\n";
        continue;
      }
      p2q::VerifyLevel row_level = level;
      p2q::VerifyReport rep;
      try {
        rep = p2q::verify_table_row(spec, row_level, opts);
      } catch (const p2q::ResourceError&) {
        if (row_level == p2q::VerifyLevel::kOrder) throw;
        row_level = p2q::VerifyLevel::kOrder;  // table too big; degrade
        rep = p2q::verify_table_row(spec, row_level, opts);
      }
      if (!extension) all_pass = all_pass && rep.pass;
      if (as_json) {
        arr.push_back(p2q::report_to_json(rep, timing));
      } else {
        std::printf("%s %s: brute %lld predicted %lld (%s)%s\n", rep.pass ? "PASS" : "FAIL",
                    spec_line(spec).c_str(), rep.brute_order, rep.predicted_order,
                    row_level == p2q::VerifyLevel::kOrder ? "order" : "isomorphism",
                    extension ? " [extension row, unasserted]" : "");
        std::fflush(stdout);
      }
    }
  }
  if (as_json) std::cout << arr.dump() << "\n";
  return all_pass ? 0 : 1;
}

int cmd_table(int p, int q, bool as_json) {
  bool numeric = p > 0 && q > 0;
  if (numeric) {
    if (!p2q::is_prime(p) || !p2q::is_prime(q) || p == q)
      throw p2q::ConditionError("table: p and q must be distinct primes");
  }
  json arr = json::array();
  for (int type = 1; type <= 11; ++type) {
    json row{{"type", type},
             {"conditions", p2q::condition_string(type)},
             {"group", p2q::group_structure_string(type)},
             {"aut", p2q::predicted_aut_structure(type)}};
    bool applies = false;
    if (numeric) {
      p2q::GroupSpec spec{type, p, q, type == 8 ? std::optional<int>(2) : std::nullopt};
      try {
        p2q::validate_spec(spec, p2q::TableMode::kStrictPaper);
        applies = true;
      } catch (const p2q::ConditionError&) {
        applies = false;
      }
      row["applies"] = applies;
      if (applies) {
        row["group_order"] = static_cast<long long>(p) * p * q;
        row["aut_order"] = p2q::predicted_aut_order(spec);
      }
    }
    arr.push_back(std::move(row));
  }
  if (as_json) {
    std::cout << arr.dump() << "\n";
  } else {
    std::printf("%-5s %-12s %-24s %s\n", "type", "conditions", "G", "Aut(G)");
    for (const json& row : arr) {
      std::string extra;
      if (numeric) {
        if (row["applies"].get<bool>())
          extra = "  [order " + row["group_order"].dump() + ", aut " + row["aut_order"].dump() + "]";
        else
          extra = "  [conditions fail]";
      }
      std::printf("%-5d %-12s %-24s %s%s\n", row["type"].get<int>(),
                  row["conditions"].get<std::string>().c_str(),
                  row["group"].get<std::string>().c_str(),
                  row["aut"].get<std::string>().c_str(), extra.c_str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"groups of order p^2 q: catalog, classification and automorphism groups"};
  app.require_subcommand(1);

  int p = 0, q = 0, type = 0, s_flag = 0;
  bool strict = false, as_json = false, full_assoc = false, timing = false, all = false;
  std::string level_name = "order";
  std::string path;
  int max_order = default_max_order();

  auto* enumerate = app.add_subcommand("enumerate", "list the isomorphism classes for (p, q)");
  enumerate->add_option("-p", p, "the squared prime")->required();
  enumerate->add_option("-q", q, "the other prime")->required();
  enumerate->add_flag("--strict-paper", strict, "exclude the q = 2 completeness row");
  enumerate->add_flag("--json", as_json, "machine-readable output");

  auto* build = app.add_subcommand("build", "emit the Cayley table of one catalog group");
  build->add_option("--type", type, "table row 1..11")->required();
  build->add_option("-p", p, "the squared prime")->required();
  build->add_option("-q", q, "the other prime")->required();
  auto* build_s = build->add_option("--s", s_flag, "type-8 parameter");
  build->add_flag("--json", as_json, "accepted; output is always JSON");

  auto* classify = app.add_subcommand("classify", "classify a Cayley-table JSON group");
  classify->add_option("file", path, "input file (default: stdin)");
  classify->add_flag("--json", as_json, "machine-readable output");
  classify->add_flag("--full-assoc-check", full_assoc, "force the full associativity check");

  auto* aut = app.add_subcommand("aut", "brute-force automorphism group order");
  auto* aut_type = aut->add_option("--type", type, "table row 1..11");
  aut->add_option("-p", p, "the squared prime");
  aut->add_option("-q", q, "the other prime");
  auto* aut_s = aut->add_option("--s", s_flag, "type-8 parameter");
  aut->add_option("file", path, "Cayley JSON input (default: stdin) when no --type");
  aut->add_flag("--json", as_json, "machine-readable output");
  aut->add_flag("--full-assoc-check", full_assoc, "force the full associativity check");
  aut->add_option("--max-order", max_order, "largest group order accepted");

  auto* verify = app.add_subcommand("verify", "check brute-force Aut against the predicted structure");
  auto* verify_type = verify->add_option("--type", type, "table row 1..11");
  verify->add_option("-p", p, "the squared prime");
  verify->add_option("-q", q, "the other prime");
  auto* verify_s = verify->add_option("--s", s_flag, "type-8 parameter");
  verify->add_flag("--all", all, "sweep every (p, q, type) with p^2 q <= --max-order");
  verify->add_option("--level", level_name, "order | isomorphism")
      ->check(CLI::IsMember({"order", "isomorphism"}));
  verify->add_option("--max-order", max_order, "group order bound (env P2Q_MAX_ORDER)");
  verify->add_flag("--json", as_json, "machine-readable reports");
  verify->add_flag("--timing", timing, "include timings in reports");

  auto* table = app.add_subcommand("table", "print the eleven-row classification table");
  table->add_option("-p", p, "optional prime for numeric columns");
  table->add_option("-q", q, "optional prime for numeric columns");
  table->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(p, q, strict, as_json);
    if (build->parsed())
      return cmd_build(spec_from_flags(type, p, q, s_flag, build_s->count() > 0));
    if (classify->parsed()) return cmd_classify(path, full_assoc, as_json);
    if (aut->parsed()) {
      bool have_spec = aut_type->count() > 0;
      p2q::GroupSpec spec;
      if (have_spec) spec = spec_from_flags(type, p, q, s_flag, aut_s->count() > 0);
      return cmd_aut(have_spec, spec, path, full_assoc, as_json, max_order);
    }
    if (verify->parsed()) {
      p2q::VerifyLevel level =
          level_name == "isomorphism" ? p2q::VerifyLevel::kIsomorphism : p2q::VerifyLevel::kOrder;
      p2q::VerifyOptions opts;
      opts.aut.max_group_order = std::max(max_order, 1);
      if (all) return cmd_verify_all(max_order, level, opts, as_json, timing);
      if (verify_type->count() == 0)
        throw p2q::ConditionError("verify: give --type/-p/-q or --all");
      p2q::GroupSpec spec = spec_from_flags(type, p, q, s_flag, verify_s->count() > 0);
      return run_one_verify(spec, level, opts, as_json, timing, nullptr);
    }
    if (table->parsed()) return cmd_table(p, q, as_json);
  } catch (const p2q::ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const p2q::ConditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
