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

#include <string>
#include <vector>

#include "p2q/catalog.hpp"
#include "p2q/finite_group.hpp"

namespace p2q {

struct AutOptions {
  // Largest |G| brute_aut accepts.
  int max_group_order = 1000;
  // Full automorphism lists are kept only below this many automorphisms;
  // above it only the count (and the generating set of G) is retained.
  long long materialize_limit = 100000;
};

// The automorphism group of `base`, found by brute force. The Cayley table
// under composition is materialized on demand by aut_cayley_table.
struct AutGroup {
  FiniteGroup base;
  std::vector<elem_t> base_generators;  // generating set the search mapped
  long long order = 0;
  std::vector<Morphism> elements;  // empty when order exceeded the limit

  bool materialized() const {
    return static_cast<long long>(elements.size()) == order;
  }
};

// Backtracking over images of a minimal generating set (sorted by descending
// element order), pruning on (element order, centralizer size) classes and
// partial-homomorphism consistency.
AutGroup brute_aut(const FiniteGroup& g, const AutOptions& opts = {});

// Cayley table of the automorphism group under composition: the product at
// (i, j) applies element j first, then element i, so the natural action map
// Aut table -> Aut(base) is a homomorphism in the ActionSpec convention.
FiniteGroup aut_cayley_table(const AutGroup& a, int max_order = kMaxTableOrder);

// C |x Aut(C) with the natural action; c must be abelian.
FiniteGroup holomorph(const FiniteGroup& c, int max_order = kMaxTableOrder,
                      const AutOptions& opts = {});

// GL(2, p) as a Cayley table; elements are the invertible matrices in
// row-major lex order.
FiniteGroup gl2_group(int p, int max_order = kMaxTableOrder);

// The table's Aut column as arithmetic. For the q = 2 extension row this is
// the unproved Hol(C_p x C_p) hypothesis (reported, not asserted).
long long predicted_aut_order(const GroupSpec& spec);

// The table's Aut column as an abstract group, built from holomorphs,
// products and the explicit involution actions. Throws ResourceError when
// the order exceeds max_order.
FiniteGroup predicted_aut(const GroupSpec& spec, int max_order = kMaxTableOrder);

std::string predicted_aut_structure(int type);                   // symbolic
std::string predicted_aut_structure(const GroupSpec& spec);      // numeric

enum class VerifyLevel { kOrder, kIsomorphism };

struct VerifyOptions {
  AutOptions aut;
  // Largest automorphism group materialized as a Cayley table for
  // isomorphism-level verification.
  int max_aut_table = 6000;
};

struct VerifyReport {
  GroupSpec spec;
  long long brute_order = 0;
  long long predicted_order = 0;
  VerifyLevel level = VerifyLevel::kOrder;
  bool pass = false;
  double millis = 0.0;
  // q = 2 completeness row: the prediction is an experiment, not a paper claim.
  bool extension_row = false;
};

// Order level compares |brute_aut(build(spec))| with the arithmetic
// prediction; isomorphism level additionally compares the two groups with
// is_isomorphic. A mismatch is a failing report, never a crash; exceeding a
// bound throws ResourceError.
VerifyReport verify_table_row(const GroupSpec& spec, VerifyLevel level,
                              const VerifyOptions& opts = {});

}  // namespace p2q
