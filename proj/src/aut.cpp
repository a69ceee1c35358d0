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

#include "p2q/aut.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_map>

#include "p2q/gl2p.hpp"
#include "p2q/modular.hpp"

namespace p2q {

AutGroup brute_aut(const FiniteGroup& g, const AutOptions& opts) {
  if (g.order() > opts.max_group_order)
    throw ResourceError("brute_aut: group order " + std::to_string(g.order()) +
                        " exceeds the bound " + std::to_string(opts.max_group_order));

  std::vector<elem_t> gens = minimal_generating_set(g);
  std::stable_sort(gens.begin(), gens.end(), [&](elem_t a, elem_t b) {
    return g.element_order(a) > g.element_order(b);
  });

  auto inv = detail::element_invariants(g);
  std::vector<std::vector<elem_t>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int x = 0; x < g.order(); ++x)
      if (inv[x] == inv[gens[i]]) cands[i].push_back(static_cast<elem_t>(x));

  AutGroup out{g, gens, 0, {}};
  detail::for_each_embedding(g, g, gens, cands, [&](const std::vector<elem_t>& img) {
    ++out.order;
    if (out.order <= opts.materialize_limit) out.elements.push_back(Morphism{g, g, img});
    return true;
  });
  if (out.order > opts.materialize_limit) {
    out.elements.clear();
    out.elements.shrink_to_fit();
  }
  return out;
}

FiniteGroup aut_cayley_table(const AutGroup& a, int max_order) {
  if (!a.materialized())
    throw ResourceError("aut_cayley_table: automorphism list was not materialized");
  long long n = a.order;
  if (n > max_order || n > kMaxTableOrder)
    throw ResourceError("aut_cayley_table: " + std::to_string(n) +
                        " automorphisms exceed the table bound " + std::to_string(max_order));

  // An automorphism is pinned down by its images of the base generators, so
  // tuples over the generating set index the composition table.
  const auto& gens = a.base_generators;
  int bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(a.base.order()))));
  if (bits * static_cast<int>(gens.size()) > 64)
    throw ResourceError("aut_cayley_table: generator tuple too wide to index");
  auto key_of = [&](const std::vector<elem_t>& images_at_gens) {
    std::uint64_t k = 0;
    for (elem_t v : images_at_gens) k = (k << bits) | v;
    return k;
  };
  std::unordered_map<std::uint64_t, elem_t> index;
  index.reserve(static_cast<std::size_t>(n) * 2);
  std::vector<elem_t> tuple(gens.size());
  for (long long i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < gens.size(); ++t) tuple[t] = a.elements[i].images[gens[t]];
    if (!index.emplace(key_of(tuple), static_cast<elem_t>(i)).second)
      throw InvariantError("aut_cayley_table: duplicate automorphism");
  }

  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (long long i = 0; i < n; ++i) {
    const auto& fi = a.elements[i].images;
    for (long long j = 0; j < n; ++j) {
      const auto& fj = a.elements[j].images;
      // product (i, j) applies j first, then i
      for (std::size_t t = 0; t < gens.size(); ++t) tuple[t] = fi[fj[gens[t]]];
      auto it = index.find(key_of(tuple));
      if (it == index.end()) throw InvariantError("aut_cayley_table: composition left the group");
      table[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  }
  return FiniteGroup(std::move(table), static_cast<int>(n));
}

FiniteGroup holomorph(const FiniteGroup& c, int max_order, const AutOptions& opts) {
  if (!c.is_abelian()) throw ConditionError("holomorph: the base group must be abelian");
  AutGroup a = brute_aut(c, opts);
  long long n = static_cast<long long>(c.order()) * a.order;
  if (n > max_order)
    throw ResourceError("holomorph: order " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(max_order));
  FiniteGroup autg = aut_cayley_table(a, max_order);
  ActionSpec act{autg, c, {}};
  act.maps.reserve(a.elements.size());
  for (const Morphism& m : a.elements) act.maps.push_back(m.images);
  return semidirect(c, autg, act);
}

FiniteGroup gl2_group(int p, int max_order) {
  if (!is_prime(p)) throw ConditionError("gl2_group: p must be prime");
  long long n = (static_cast<long long>(p) * p - 1) * (static_cast<long long>(p) * p - p);
  if (n > max_order || n > kMaxTableOrder)
    throw ResourceError("gl2_group: |GL(2," + std::to_string(p) + ")| = " + std::to_string(n) +
                        " exceeds the table bound");

  std::vector<MatrixGL2> mats;
  std::vector<int> index(static_cast<std::size_t>(p) * p * p * p, -1);
  auto code = [p](const MatrixGL2& m) {
    return ((static_cast<std::size_t>(m.m[0]) * p + m.m[1]) * p + m.m[2]) * p + m.m[3];
  };
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          MatrixGL2 m{p, {a, b, c, d}};
          if (gl2_det(m) == 0) continue;
          index[code(m)] = static_cast<int>(mats.size());
          mats.push_back(m);
        }
  if (static_cast<long long>(mats.size()) != n) throw InvariantError("gl2_group: bad count");

  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j)
      table[i * mats.size() + j] = static_cast<elem_t>(index[code(gl2_mul(mats[i], mats[j]))]);
  return FiniteGroup(std::move(table), static_cast<int>(n));
}

long long predicted_aut_order(const GroupSpec& spec) {
  validate_spec(spec, TableMode::kComplete);
  long long p = spec.p, q = spec.q;
  switch (spec.type) {
    case 1: return p * (p - 1) * (q - 1);
    case 2: return p * q * (q - 1);
    case 3: return q * (q - 1);
    case 4: return p * p * p * (p - 1);
    case 5: return (p * p - 1) * (p * p - p) * (q - 1);
    case 6: return p * (p - 1) * (p - 1);
    case 7: return p * p * (p * p - 1) * (p * p - p);
    case 8: return p * p * (p - 1) * (p - 1);
    case 9: return 2 * p * p * (p - 1) * (p - 1);
    case 10: return 2 * p * p * (p * p - 1);
    case 11: return p * (p - 1) * q * (q - 1);
    default: throw InvariantError("predicted_aut_order: unreachable");
  }
}

namespace {

// The swap (x, y) -> (y, x) on an H-major product of two copies of the same
// group of order n0.
std::vector<elem_t> swap_map(int n0) {
  std::vector<elem_t> out(static_cast<std::size_t>(n0) * n0);
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      out[static_cast<std::size_t>(x) * n0 + y] = static_cast<elem_t>(y * n0 + x);
  return out;
}

// Generator of the centralizer torus of the Singer element z: the matrix
// u*I + v*Z identified with a generator of F_{p^2}^x under F_p[Z] = F_{p^2},
// Z <-> lambda.
MatrixGL2 torus_generator(int p, const MatrixGL2& z) {
  Fp2 f(p);
  auto [lambda, mu] = eigenvalues(z);
  (void)mu;
  Fp2Element gen = f.zero();
  bool found = false;
  for (int u = 0; u < p && !found; ++u)
    for (int v = 0; v < p && !found; ++v) {
      Fp2Element x = f.make(u, v);
      if (f.is_zero(x)) continue;
      if (f.mult_order(x) == p * p - 1) {
        gen = x;
        found = true;
      }
    }
  if (!found) throw InvariantError("torus_generator: F_{p^2}^x has no generator");
  // write gen = x + y * lambda in the basis (1, lambda); lambda.v != 0 as z is irreducible
  long long y = gen.v * inv_mod(lambda.v, p) % p;
  long long x = ((gen.u - y * lambda.u) % p + p) % p;
  MatrixGL2 w{p,
              {static_cast<int>((x + y * z.m[0]) % p), static_cast<int>(y * z.m[1] % p),
               static_cast<int>(y * z.m[2] % p), static_cast<int>((x + y * z.m[3]) % p)}};
  if (mat_order(w) != p * p - 1) throw InvariantError("torus_generator: wrong order");
  return w;
}

std::vector<elem_t> matrix_map_on_v(const MatrixGL2& mat) {
  int p = mat.p;
  std::vector<elem_t> out(static_cast<std::size_t>(p) * p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      auto [x, y] = gl2_apply(mat, {a, b});
      out[static_cast<std::size_t>(a) * p + b] = static_cast<elem_t>(x * p + y);
    }
  return out;
}

}  // namespace

FiniteGroup predicted_aut(const GroupSpec& spec, int max_order) {
  long long n = predicted_aut_order(spec);
  if (n > max_order || n > kMaxTableOrder)
    throw ResourceError("predicted_aut: order " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(std::min<long long>(max_order, kMaxTableOrder)));
  int p = spec.p, q = spec.q;
  switch (spec.type) {
    case 1:
      return direct_product(direct_product(cyclic(p), cyclic(p - 1)), cyclic(q - 1));
    case 2:
      return direct_product(cyclic(p), holomorph(cyclic(q)));
    case 3:
      return holomorph(cyclic(q));
    case 4:
      return holomorph(cyclic(p * p));
    case 5:
      return direct_product(gl2_group(p), cyclic(q - 1));
    case 6:
      return direct_product(cyclic(p - 1), holomorph(cyclic(p)));
    case 7:
      return holomorph(direct_product(cyclic(p), cyclic(p)));
    case 8:
      return direct_product(holomorph(cyclic(p)), holomorph(cyclic(p)));
    case 9: {
      // C_2 acting on Hol(C_p) x Hol(C_p) by exchanging the two copies.
      FiniteGroup hol = holomorph(cyclic(p));
      FiniteGroup d = direct_product(hol, hol);
      FiniteGroup c2 = cyclic(2);
      ActionSpec act = action_from_generator(c2, d, 1, swap_map(hol.order()));
      return semidirect(d, c2, act);
    }
    case 10: {
      // (C_2 |x C_{p^2-1}) |x (C_p x C_p): the torus C_{p^2-1} acts on V as
      // the centralizer of the Singer element, C_2 acts on the torus as the
      // Frobenius g -> g^p and on V as the eigenvalue-swapping involution S.
      MatrixGL2 z = singer_element(p, q);
      MatrixGL2 w = torus_generator(p, z);
      FiniteGroup v = direct_product(cyclic(p), cyclic(p));
      FiniteGroup torus = cyclic(p * p - 1);
      ActionSpec torus_act = action_from_generator(torus, v, 1, matrix_map_on_v(w));
      FiniteGroup b = semidirect(v, torus, torus_act);

      MatrixGL2 s = gl2_from_entries(p, 0, 1, 1, 0);
      const std::vector<elem_t> s_on_v = matrix_map_on_v(s);
      int nt = torus.order();
      std::vector<elem_t> frob(static_cast<std::size_t>(b.order()));
      for (int hv = 0; hv < v.order(); ++hv)
        for (int j = 0; j < nt; ++j)
          frob[static_cast<std::size_t>(hv) * nt + j] =
              static_cast<elem_t>(static_cast<std::size_t>(s_on_v[hv]) * nt +
                                  static_cast<long long>(j) * p % nt);
      FiniteGroup c2 = cyclic(2);
      ActionSpec act = action_from_generator(c2, b, 1, frob);
      return semidirect(b, c2, act);
    }
    case 11:
      return direct_product(holomorph(cyclic(p)), holomorph(cyclic(q)));
    default:
      throw InvariantError("predicted_aut: unreachable");
  }
}

std::string predicted_aut_structure(int type) {
  switch (type) {
    case 1: return "C_p x C_{p-1} x C_{q-1}";
    case 2: return "C_p x Hol(C_q)";
    case 3: return "Hol(C_q)";
    case 4: return "Hol(C_{p^2})";
    case 5: return "GL(2,p) x C_{q-1}";
    case 6: return "C_{p-1} x Hol(C_p)";
    case 7: return "Hol(C_p x C_p)";
    case 8: return "Hol(C_p) x Hol(C_p)";
    case 9: return "C_2 |x (Hol(C_p) x Hol(C_p))";
    case 10: return "(C_2 |x C_{p^2-1}) |x (C_p x C_p)";
    case 11: return "Hol(C_p) x Hol(C_q)";
    default: throw ConditionError("type must be 1..11");
  }
}

std::string predicted_aut_structure(const GroupSpec& spec) {
  long long p = spec.p, q = spec.q;
  auto c = [](long long n) { return "C_" + std::to_string(n); };
  auto hol = [&](long long n) { return "Hol(C_" + std::to_string(n) + ")"; };
  switch (spec.type) {
    case 1: return c(p) + " x " + c(p - 1) + " x " + c(q - 1);
    case 2: return c(p) + " x " + hol(q);
    case 3: return hol(q);
    case 4: return hol(p * p);
    case 5: return "GL(2," + std::to_string(p) + ") x " + c(q - 1);
    case 6: return c(p - 1) + " x " + hol(p);
    case 7: return "Hol(" + c(p) + " x " + c(p) + ")";
    case 8: return hol(p) + " x " + hol(p);
    case 9: return "C_2 |x (" + hol(p) + " x " + hol(p) + ")";
    case 10: return "(C_2 |x " + c(p * p - 1) + ") |x (" + c(p) + " x " + c(p) + ")";
    case 11: return hol(p) + " x " + hol(q);
    default: throw ConditionError("type must be 1..11");
  }
}

VerifyReport verify_table_row(const GroupSpec& spec, VerifyLevel level,
                              const VerifyOptions& opts) {
  validate_spec(spec, TableMode::kComplete);
  auto t0 = std::chrono::steady_clock::now();

  VerifyReport rep;
  rep.spec = spec;
  rep.level = level;
  rep.extension_row = (spec.type == 7 && spec.q == 2);
  rep.predicted_order = predicted_aut_order(spec);

  FiniteGroup g = build(spec);
  AutGroup a = brute_aut(g, opts.aut);
  rep.brute_order = a.order;

  if (level == VerifyLevel::kOrder) {
    rep.pass = (rep.brute_order == rep.predicted_order);
  } else {
    FiniteGroup brute_table = aut_cayley_table(a, opts.max_aut_table);
    FiniteGroup predicted = predicted_aut(spec, opts.max_aut_table);
    rep.pass = (rep.brute_order == rep.predicted_order) && is_isomorphic(brute_table, predicted);
  }

  auto t1 = std::chrono::steady_clock::now();
  rep.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

}  // namespace p2q
