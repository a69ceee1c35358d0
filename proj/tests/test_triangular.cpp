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

#include <algorithm>
#include <set>

#include "p2q/aut.hpp"
#include "p2q/catalog.hpp"
#include "p2q/modular.hpp"
#include "p2q/triangular.hpp"

using namespace p2q;

namespace {

SemidirectContext context_for(const GroupSpec& spec) {
  CatalogBuild parts = build_parts(spec);
  return make_context(parts.group, parts.h, parts.k);
}

TriangularAut identity_triple(const SemidirectContext& ctx) {
  TriangularAut t;
  t.a.resize(ctx.nh);
  t.d.resize(ctx.nk);
  t.b.assign(ctx.nk, ctx.h_group.identity());
  for (int i = 0; i < ctx.nh; ++i) t.a[i] = static_cast<elem_t>(i);
  for (int i = 0; i < ctx.nk; ++i) t.d[i] = static_cast<elem_t>(i);
  return t;
}

// The linear map of an automorphism of V = C_p x C_p (index a*p + b).
MatrixGL2 as_matrix(const std::vector<elem_t>& a_map, int p) {
  int r0 = a_map[p];  // image of e1 = (1, 0)
  int r1 = a_map[1];  // image of e2 = (0, 1)
  return gl2_from_entries(p, r0 / p, r0 % p, r1 / p, r1 % p);
}

}  // namespace

TEST_CASE("geometric sum identity") {
  // Y = 3*I over F_11 has order 5: 1 + 3 + 9 + 27 + 81 = 121 = 0 mod 11
  CHECK(geometric_sum_is_zero(gl2_scalar(11, 3), 5));
  // eigenvalue 1 is the counterexample: the sum is q * I != 0
  CHECK_FALSE(geometric_sum_is_zero(gl2_identity(11), 5));
  CHECK_THROWS_AS(geometric_sum_is_zero(gl2_scalar(11, 3), 7), ConditionError);

  // cyclic variant: an order-p action on C_q (type-2 shape)
  int m = element_of_order(2, 5);
  CHECK(geometric_sum_is_zero_cyclic(m, 2, 5));
  CHECK(geometric_sum_is_zero_cyclic(element_of_order(3, 7), 3, 7));
  CHECK_FALSE(geometric_sum_is_zero_cyclic(1, 5, 7));
}

TEST_CASE("contexts validate their layout") {
  GroupSpec spec{4, 3, 2, std::nullopt};
  CatalogBuild parts = build_parts(spec);
  SemidirectContext ctx = make_context(parts.group, parts.h, parts.k);
  CHECK(ctx.nh == 9);
  CHECK(ctx.nk == 2);
  // H must be the normal factor: swapping the factors is rejected
  CHECK_THROWS_AS(make_context(parts.group, parts.k, parts.h), ConditionError);
}

TEST_CASE("b_from_b0") {
  SemidirectContext ctx = context_for(GroupSpec{7, 7, 3, std::nullopt});
  TriangularAut t = identity_triple(ctx);

  // b0 = identity gives the constant-identity b
  auto b_id = b_from_b0(ctx.h_group.identity(), ctx, t.d);
  CHECK(std::all_of(b_id.begin(), b_id.end(),
                    [&](elem_t x) { return x == ctx.h_group.identity(); }));

  // any b0 gives a crossed-law b whose triple is a full automorphism
  for (int b0 = 0; b0 < ctx.nh; ++b0) {
    TriangularAut tb = identity_triple(ctx);
    tb.b = b_from_b0(static_cast<elem_t>(b0), ctx, tb.d);
    CHECK(tb.b[1] == b0);
    CHECK(crossed_law_holds(ctx, tb.b, tb.d));
    CHECK_NOTHROW(triangular_to_aut(ctx, tb));
  }

  // the no-fixed-point hypothesis is enforced: a direct product has Y = id
  SemidirectContext direct = context_for(GroupSpec{5, 3, 2, std::nullopt});
  TriangularAut td = identity_triple(direct);
  CHECK_THROWS_AS(b_from_b0(1, direct, td.d), ConditionError);
}

TEST_CASE("triangular maps to automorphisms and back") {
  SemidirectContext ctx = context_for(GroupSpec{4, 3, 2, std::nullopt});

  // identity triple -> identity automorphism
  Morphism id = triangular_to_aut(ctx, identity_triple(ctx));
  CHECK(id.images == identity_morphism(ctx.group).images);
  TriangularAut t0 = decompose_aut(id, ctx);
  CHECK(t0.b == std::vector<elem_t>(ctx.nk, ctx.h_group.identity()));

  // a = doubling on C_9 with b = 0, d = 1 is a valid automorphism: a
  // commutes with the (inversion) action
  TriangularAut t = identity_triple(ctx);
  for (int i = 0; i < 9; ++i) t.a[i] = static_cast<elem_t>(2 * i % 9);
  CHECK(compatibility_holds(ctx, t.a, t.d));
  CHECK(triangular_valid(ctx, t));
  Morphism m = triangular_to_aut(ctx, t);
  CHECK(is_automorphism(m));
  TriangularAut back = decompose_aut(m, ctx);
  CHECK(back.a == t.a);
  CHECK(back.d == t.d);
  CHECK(back.b == t.b);

  // an invalid triple surfaces as a non-homomorphism with a witness
  TriangularAut bad = identity_triple(ctx);
  std::swap(bad.b[0], bad.b[1]);
  bad.b[0] = 3;  // violates b(identity) = identity
  CHECK_THROWS_AS(triangular_to_aut(ctx, bad), ConditionError);
}

TEST_CASE("every brute automorphism of an H-characteristic type decomposes") {
  for (const GroupSpec& spec :
       {GroupSpec{3, 2, 5, std::nullopt}, GroupSpec{4, 3, 2, std::nullopt},
        GroupSpec{7, 7, 3, std::nullopt}, GroupSpec{9, 7, 3, std::nullopt},
        GroupSpec{10, 5, 3, std::nullopt}}) {
    SemidirectContext ctx = context_for(spec);
    AutGroup a = brute_aut(ctx.group);
    for (const Morphism& phi : a.elements) {
      TriangularAut t = decompose_aut(phi, ctx);
      CHECK(triangular_valid(ctx, t));
      CHECK(triangular_to_aut(ctx, t).images == phi.images);
    }
  }
}

TEST_CASE("trivial-centre types force d = 1") {
  for (const GroupSpec& spec : {GroupSpec{3, 2, 5, std::nullopt}, GroupSpec{4, 3, 2, std::nullopt},
                                GroupSpec{4, 5, 2, std::nullopt}}) {
    SemidirectContext ctx = context_for(spec);
    AutGroup a = brute_aut(ctx.group);
    for (const Morphism& phi : a.elements) {
      TriangularAut t = decompose_aut(phi, ctx);
      for (int k = 0; k < ctx.nk; ++k) CHECK(t.d[k] == k);
    }
  }
}

TEST_CASE("type 9: the d != 1 part acts antidiagonally") {
  GroupSpec spec{9, 7, 3, std::nullopt};
  SemidirectContext ctx = context_for(spec);
  AutGroup a = brute_aut(ctx.group);
  int twisted = 0;
  for (const Morphism& phi : a.elements) {
    TriangularAut t = decompose_aut(phi, ctx);
    if (t.d[1] == 1) continue;
    ++twisted;
    CHECK(t.d[1] == 2);  // z^d = z^{-1}
    MatrixGL2 am = as_matrix(t.a, 7);
    CHECK(am.m[0] == 0);
    CHECK(am.m[3] == 0);
  }
  CHECK(twisted == a.order / 2);

  // -Y^{-1} S from the decomposition data is an antidiagonal involution
  std::vector<elem_t> d_inv(3);
  d_inv[0] = 0;
  d_inv[1] = 2;
  d_inv[2] = 1;
  MatrixGL2 y = as_matrix(conj_action_on_h(ctx, d_inv[1]), 7);
  MatrixGL2 s = gl2_from_entries(7, 0, 1, 1, 0);
  MatrixGL2 yis = gl2_mul(gl2_inv(y), s);
  MatrixGL2 m = gl2_from_entries(7, -yis.m[0], -yis.m[1], -yis.m[2], -yis.m[3]);
  CHECK(m.m[0] == 0);
  CHECK(m.m[3] == 0);
  CHECK(gl2_eq(gl2_mul(m, m), gl2_identity(7)));

  // conjugating a diagonal pure-a triple by the (S, d) triple swaps the two
  // diagonal coordinates
  TriangularAut ts = identity_triple(ctx);
  ts.d = d_inv;
  for (int i = 0; i < ctx.nh; ++i) {
    auto [x, yy] = gl2_apply(s, {i / 7, i % 7});
    ts.a[i] = static_cast<elem_t>(x * 7 + yy);
  }
  REQUIRE(triangular_valid(ctx, ts));
  TriangularAut tdiag = identity_triple(ctx);
  MatrixGL2 diag = gl2_diag(7, 2, 5);
  for (int i = 0; i < ctx.nh; ++i) {
    auto [x, yy] = gl2_apply(diag, {i / 7, i % 7});
    tdiag.a[i] = static_cast<elem_t>(x * 7 + yy);
  }
  REQUIRE(triangular_valid(ctx, tdiag));
  Morphism ms = triangular_to_aut(ctx, ts);
  Morphism md = triangular_to_aut(ctx, tdiag);
  Morphism conj = compose(ms, compose(md, inverse_automorphism(ms)));
  TriangularAut tc = decompose_aut(conj, ctx);
  CHECK(gl2_eq(as_matrix(tc.a, 7), gl2_diag(7, 5, 2)));
}

TEST_CASE("type 10: torus of d = 1 parts and the inverting involution") {
  GroupSpec spec{10, 5, 3, std::nullopt};
  SemidirectContext ctx = context_for(spec);
  MatrixGL2 z = singer_element(5, 3);
  AutGroup a = brute_aut(ctx.group);
  std::vector<MatrixGL2> torus;
  bool found_inverter = false;
  for (const Morphism& phi : a.elements) {
    TriangularAut t = decompose_aut(phi, ctx);
    MatrixGL2 am = as_matrix(t.a, 5);
    if (t.d[1] == 1) {
      if (t.b == std::vector<elem_t>(ctx.nk, ctx.h_group.identity())) torus.push_back(am);
    } else {
      MatrixGL2 conj = gl2_mul(gl2_mul(gl2_inv(am), z), am);
      CHECK(gl2_eq(conj, gl2_inv(z)));
      found_inverter = true;
    }
  }
  CHECK(static_cast<int>(torus.size()) == 24);  // p^2 - 1
  CHECK(found_inverter);
  int full_order = 0;
  for (const auto& m : torus)
    if (mat_order(m) == 24) ++full_order;
  CHECK(full_order == euler_phi(24));  // cyclic witness
}

TEST_CASE("split extension: conjugation twists b0 by a") {
  GroupSpec spec{7, 7, 3, std::nullopt};
  SemidirectContext ctx = context_for(spec);

  TriangularAut tb = identity_triple(ctx);
  tb.b = b_from_b0(static_cast<elem_t>(5), ctx, tb.d);
  TriangularAut ta = identity_triple(ctx);
  MatrixGL2 m = gl2_from_entries(7, 2, 1, 3, 4);
  for (int i = 0; i < ctx.nh; ++i) {
    auto [x, y] = gl2_apply(m, {i / 7, i % 7});
    ta.a[i] = static_cast<elem_t>(x * 7 + y);
  }
  REQUIRE(triangular_valid(ctx, ta));

  Morphism mb = triangular_to_aut(ctx, tb);
  Morphism ma = triangular_to_aut(ctx, ta);
  Morphism conj = compose(ma, compose(mb, inverse_automorphism(ma)));
  TriangularAut tc = decompose_aut(conj, ctx);
  for (int i = 0; i < ctx.nh; ++i) CHECK(tc.a[i] == i);
  for (int k = 0; k < ctx.nk; ++k) CHECK(tc.d[k] == k);
  CHECK(tc.b[1] == ta.a[tb.b[1]]);  // b0 -> b0^a
}

TEST_CASE("triple composition matches morphism composition") {
  GroupSpec spec{4, 3, 2, std::nullopt};
  SemidirectContext ctx = context_for(spec);
  AutGroup a = brute_aut(ctx.group);
  REQUIRE(a.order == 54);
  for (int i = 0; i < 10; ++i)
    for (int j = 40; j < 54; j += 3) {
      Morphism comp = compose(a.elements[i], a.elements[j]);
      TriangularAut t = decompose_aut(comp, ctx);
      CHECK(triangular_to_aut(ctx, t).images == comp.images);
    }
}

TEST_CASE("counting triangular triples") {
  CHECK(count_triangular_auts(context_for(GroupSpec{4, 3, 2, std::nullopt})) == 54);
  CHECK(count_triangular_auts(context_for(GroupSpec{10, 2, 3, std::nullopt})) == 24);
  CHECK(count_triangular_auts(context_for(GroupSpec{2, 3, 7, std::nullopt})) == 126);
}

TEST_CASE("Curran's S subgroup") {
  // type 2 at (3,7): S is generated by x -> x^{1+p}, order p
  SemidirectContext t2 = context_for(GroupSpec{2, 3, 7, std::nullopt});
  auto s2 = s_subgroup(t2);
  CHECK(s2.size() == 3);
  std::set<int> images_of_gen;
  for (const auto& d : s2) images_of_gen.insert(d[1]);
  CHECK(images_of_gen == std::set<int>{1, 4, 7});  // 1, 1+p, 1+2p mod 9
  CHECK(brute_aut(t2.group).order == 126);  // q (q-1) p

  // type 3: faithful action, S trivial, Aut = Hol(C_q)
  SemidirectContext t3 = context_for(GroupSpec{3, 2, 5, std::nullopt});
  CHECK(s_subgroup(t3).size() == 1);
  AutGroup a3 = brute_aut(t3.group);
  CHECK(a3.order == 20);
  CHECK(is_isomorphic(aut_cayley_table(a3), holomorph(cyclic(5))));

  // type 4: S trivial, Aut = Hol(C_{p^2})
  SemidirectContext t4 = context_for(GroupSpec{4, 3, 2, std::nullopt});
  CHECK(s_subgroup(t4).size() == 1);
}

TEST_CASE("direct product automorphism matrices") {
  // C_3 x C_4: 2 * 2 * 1 * 1 quadruples = |Aut(C_12)|
  FiniteGroup c3 = cyclic(3), c4 = cyclic(4);
  CHECK(count_direct_quadruples(c3, c4) == 4);
  CHECK(count_direct_quadruples(c3, c4) == brute_aut(cyclic(12)).order);

  // type 5 at (2,3): |GL(2,2)| * |C_2| = 12
  CatalogBuild t5 = build_parts(GroupSpec{5, 2, 3, std::nullopt});
  CHECK(count_direct_quadruples(t5.h, t5.k) == 12);
  CHECK(brute_aut(t5.group).order == 12);

  // type 6 at (3,2): 12 automorphisms, every c lands in the trivial Z(K)
  CatalogBuild t6 = build_parts(GroupSpec{6, 3, 2, std::nullopt});
  CHECK(count_direct_quadruples(t6.h, t6.k) == 12);
  SemidirectContext ctx6 = make_context(t6.group, t6.h, t6.k);
  AutGroup a6 = brute_aut(t6.group);
  CHECK(a6.order == 12);
  for (const Morphism& phi : a6.elements) {
    DirectAutMatrix m = direct_aut_matrix(phi, ctx6);
    for (elem_t v : m.c) CHECK(v == ctx6.k_group.identity());
  }

  // twisted contexts are rejected
  SemidirectContext t4 = context_for(GroupSpec{4, 3, 2, std::nullopt});
  AutGroup a4 = brute_aut(t4.group);
  CHECK_THROWS_AS(direct_aut_matrix(a4.elements[0], t4), ConditionError);
}
