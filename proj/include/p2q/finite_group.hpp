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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "p2q/errors.hpp"

namespace p2q {

// Element index inside a Cayley table.
using elem_t = std::uint16_t;

// Largest group order representable as an in-memory Cayley table.
inline constexpr int kMaxTableOrder = 8192;

enum class AssocCheck {
  kAuto,  // full O(n^3) check for n <= 512, seeded random spot checks above
  kFull,  // always the full check
};

// A finite group given by its full multiplication table. Immutable after
// construction and cheap to copy (copies share the table), so any number of
// concurrent readers is safe.
class FiniteGroup {
 public:
  // Validates the Latin-square property, a two-sided identity, and
  // associativity (per `check`). table is row-major: table[i*n + j] = x_i * x_j.
  FiniteGroup(std::vector<elem_t> table, int order,
              std::vector<std::string> labels = {},
              AssocCheck check = AssocCheck::kAuto);

  int order() const { return d_->n; }
  elem_t identity() const { return d_->identity; }
  elem_t mul(elem_t a, elem_t b) const {
    return d_->table[static_cast<std::size_t>(a) * d_->n + b];
  }
  elem_t inv(elem_t a) const { return d_->inverse[a]; }
  // g^{-1} a g, the paper's a^g.
  elem_t conj(elem_t a, elem_t g) const { return mul(mul(inv(g), a), g); }
  elem_t commutator(elem_t a, elem_t b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  elem_t pow(elem_t a, long long e) const;
  int element_order(elem_t a) const { return d_->elem_order[a]; }
  bool is_abelian() const { return d_->abelian; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::vector<elem_t>& flat_table() const { return d_->table; }

  // Identity of the shared table object, not structural equality.
  bool same(const FiniteGroup& other) const { return d_ == other.d_; }

 private:
  struct Data {
    int n = 0;
    elem_t identity = 0;
    bool abelian = false;
    std::vector<elem_t> table;
    std::vector<elem_t> inverse;
    std::vector<int> elem_order;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> d_;
};

// A total map between two groups, stored element-by-element. Whether it is a
// homomorphism / automorphism is checked by the predicates below, not by
// construction.
struct Morphism {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<elem_t> images;

  elem_t operator()(elem_t x) const { return images[x]; }
};

Morphism identity_morphism(const FiniteGroup& g);
bool is_homomorphism(const Morphism& m);
bool is_bijective(const Morphism& m);
// Bijective homomorphism with source and target the same group object.
bool is_automorphism(const Morphism& m);
// Applies g first, then f; requires g.target and f.source to be the same group.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism inverse_automorphism(const Morphism& m);

// The data of a semidirect product H x| K: one automorphism of H (as an image
// array over H) per element of K.
//
// Convention, fixed here once for the whole library: `maps` is a homomorphism
// K -> Aut(H) under ordinary composition, maps[k1 k2] = maps[k1] o maps[k2],
// and the product built from it is (h1, k1)(h2, k2) = (h1 * maps[k1](h2), k1 k2).
// Inside the product this makes k h k^{-1} = maps[k](h), i.e. the paper-style
// right action h^k equals maps[k^{-1}](h). All consumers go through the public
// constructors, so formulas that need h^k read it off the built Cayley table.
struct ActionSpec {
  FiniteGroup actor;  // K
  FiniteGroup acted;  // H
  std::vector<std::vector<elem_t>> maps;
};

ActionSpec trivial_action(const FiniteGroup& k, const FiniteGroup& h);

// Extends gen -> gen_map multiplicatively over K = <gen>. Throws if gen does
// not generate K, gen_map is not an automorphism of H, or the extension is
// inconsistent (gen_map's order does not divide ord(gen)).
ActionSpec action_from_generator(const FiniteGroup& k, const FiniteGroup& h,
                                 elem_t gen, const std::vector<elem_t>& gen_map);

// Throws ConditionError unless maps is a homomorphism K -> Aut(H) sending the
// identity to the identity map.
void validate_action(const ActionSpec& act);

// --- constructors ---------------------------------------------------------

// C_n with i * j = (i + j) mod n, identity 0. Rejects n = 0.
FiniteGroup cyclic(int n);

// H-major ordering: (h, k) has index h*|K| + k; componentwise product.
FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k);

// H x| K with the ActionSpec convention above; H-major ordering.
FiniteGroup semidirect(const FiniteGroup& h, const FiniteGroup& k,
                       const ActionSpec& act);

// Cayley table of a closed subset of g (throws if not closed). Local index =
// position in `elements`, which must be sorted ascending.
FiniteGroup as_group(const FiniteGroup& g, const std::vector<elem_t>& elements);

// --- structural queries ----------------------------------------------------

// All return sorted element-index sets.
std::vector<elem_t> center(const FiniteGroup& g);
std::vector<elem_t> derived_subgroup(const FiniteGroup& g);
// One Sylow r-subgroup, grown deterministically by scanning r-elements in
// index order. Rejects r not dividing |G|.
std::vector<elem_t> sylow(const FiniteGroup& g, int r);
std::vector<elem_t> closure(const FiniteGroup& g, std::vector<elem_t> gens);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<elem_t>& sub);

// Greedy: repeatedly adds the element whose closure grows the subgroup most
// (ties broken by smallest index), giving <= log2|G| generators.
std::vector<elem_t> minimal_generating_set(const FiniteGroup& g);

// Backtracking search mapping a minimal generating set of g1 to
// invariant-compatible tuples of g2. Returns a witness on success.
std::optional<Morphism> find_isomorphism(const FiniteGroup& g1,
                                         const FiniteGroup& g2);
bool is_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2);

namespace detail {

// Enumerates injective homomorphisms g1 -> g2 determined by images of `gens`,
// where gens[i] may map to any element of cands[i]. Backtracks with
// per-prefix subgroup chains; calls sink for every complete embedding found
// (images array over all of <gens>; unreached elements hold garbage when
// <gens> != g1). Stops early when sink returns false.
void for_each_embedding(
    const FiniteGroup& g1, const FiniteGroup& g2,
    const std::vector<elem_t>& gens,
    const std::vector<std::vector<elem_t>>& cands,
    const std::function<bool(const std::vector<elem_t>&)>& sink);

// (order, centralizer size) per element; automorphism-invariant labels used
// for candidate filtering.
std::vector<std::pair<int, int>> element_invariants(const FiniteGroup& g);

}  // namespace detail

}  // namespace p2q
