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

#include <vector>

#include "p2q/finite_group.hpp"
#include "p2q/gl2p.hpp"

namespace p2q {

// An H-major product G = H x| K together with its factors. h-element i sits
// at index i*|K|, k-element j at index j; the canonical K-transversal is the
// copy {identity_H} x K. All paper-style exponent actions h^k are read off
// the product's own Cayley table (h^k = k^{-1} h k), which keeps the formulas
// independent of the stored action convention.
struct SemidirectContext {
  FiniteGroup group;
  FiniteGroup h_group;
  FiniteGroup k_group;
  int nh = 0;
  int nk = 0;

  elem_t embed_h(int h) const { return static_cast<elem_t>(h * nk); }
  elem_t embed_k(int k) const { return static_cast<elem_t>(k); }
  int h_part(elem_t x) const { return x / nk; }
  int k_part(elem_t x) const { return x % nk; }
};

// Validates the H-major layout (including normality of the H copy) and
// bundles the pieces.
SemidirectContext make_context(const FiniteGroup& g, const FiniteGroup& h,
                               const FiniteGroup& k);

// h -> h^{(1,k)} on H-part indices; the k-th canonical transversal element
// acting by table conjugation.
std::vector<elem_t> conj_action_on_h(const SemidirectContext& ctx, int k);

// An automorphism of H x| K leaving H invariant, as the lower-triangular
// triple [[a, 0], [b, d]]: (h, k) -> (h^a * k^b, k^d).
struct TriangularAut {
  std::vector<elem_t> a;  // automorphism of H
  std::vector<elem_t> d;  // automorphism of K
  std::vector<elem_t> b;  // map K -> H, the crossed homomorphism
};

// The crossed-homomorphism law, written with the twist the product
// constructor fixes: b(xy) = b(x) * [x^d](b(y)) where [k] is conjugation by
// the canonical transversal element, h -> k h k^{-1}. (The right-exponent
// form b(xy) = b(x) * b(y)^{x^d} is the same law in the opposite composition
// convention.)
bool crossed_law_holds(const SemidirectContext& ctx, const std::vector<elem_t>& b,
                       const std::vector<elem_t>& d);

// a([k](h)) = [k^d](a(h)) for all h, k; equivalent whichever of the two
// conjugation twists is used, since k ranges over all of K.
bool compatibility_holds(const SemidirectContext& ctx, const std::vector<elem_t>& a,
                         const std::vector<elem_t>& d);

// All TriangularAut invariants: a in Aut(H), d in Aut(K), compatibility and
// the crossed law.
bool triangular_valid(const SemidirectContext& ctx, const TriangularAut& t);

// True iff 1 + Y + ... + Y^{q-1} = 0 in End(C_p x C_p); requires Y^q = I.
bool geometric_sum_is_zero(const MatrixGL2& y, int q);

// The cyclic-group variant: Y is y -> multiplier * y on C_modulus with
// multiplier^q = 1; true iff the endomorphism sum annihilates every element.
bool geometric_sum_is_zero_cyclic(long long multiplier, int q, int modulus);

// The unique crossed homomorphism b with b(z) = b0, for K = <z> cyclic with
// generator index 1 and Y (the action of z^d on H) fixed-point-free; the
// geometric-sum identity makes b(z^{|K|}) = 1 come out automatically.
std::vector<elem_t> b_from_b0(elem_t b0, const SemidirectContext& ctx,
                              const std::vector<elem_t>& d);

// The induced morphism; throws ConditionError carrying the witnessing pair if
// the triple fails to be an automorphism.
Morphism triangular_to_aut(const SemidirectContext& ctx, const TriangularAut& t);

// The unique triple with triangular_to_aut(t) = phi; throws ConditionError
// with a witness element if phi does not preserve H.
TriangularAut decompose_aut(const Morphism& phi, const SemidirectContext& ctx);

// Number of valid triples. Requires K cyclic (generator index 1) and every
// compatible d to induce a fixed-point-free Y, which makes the b's biject
// with H; spot-validates the crossed law along the way.
long long count_triangular_auts(const SemidirectContext& ctx);

// Curran's S = { d in Aut(K) : k^{-1} k^d in C_K(H) for all k }, as image
// arrays over K.
std::vector<std::vector<elem_t>> s_subgroup(const SemidirectContext& ctx);

// Thm-3.2-style matrix of an automorphism of a direct product H x K:
// (h, k) -> (h^a * k^b, h^c * k^d) with b into Z(H) and c into Z(K).
struct DirectAutMatrix {
  std::vector<elem_t> a;  // Aut(H)
  std::vector<elem_t> d;  // Aut(K)
  std::vector<elem_t> b;  // Hom(K, Z(H))
  std::vector<elem_t> c;  // Hom(H, Z(K))
};

// Requires ctx to be a direct product (trivial action); the caller must know
// H and K share no direct factor. Throws ConditionError when phi is not
// decomposable.
DirectAutMatrix direct_aut_matrix(const Morphism& phi, const SemidirectContext& ctx);

// |Aut(H)| * |Aut(K)| * |Hom(K, Z(H))| * |Hom(H, Z(K))|, the quadruple count
// of the matrix description.
long long count_direct_quadruples(const FiniteGroup& h, const FiniteGroup& k);

}  // namespace p2q
