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

#include "p2q/catalog.hpp"

#include <algorithm>

#include "p2q/gl2p.hpp"
#include "p2q/modular.hpp"

namespace p2q {

namespace {

void require_divides(long long d, long long n, const std::string& what) {
  if (n % d != 0)
    throw ConditionError(what + " (" + std::to_string(d) + " does not divide " +
                         std::to_string(n) + ")");
}

// y -> m*y on cyclic(n) as an image array.
std::vector<elem_t> multiplier_map(int n, long long m) {
  std::vector<elem_t> out(n);
  for (int y = 0; y < n; ++y) out[y] = static_cast<elem_t>(m * y % n);
  return out;
}

// The linear action of `mat` on V = C_p x C_p with index a*p + b <-> row (a, b).
std::vector<elem_t> matrix_map(const MatrixGL2& mat) {
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

int canonical_s(int s, int q) {
  int r = s % q;
  if (r < 0) r += q;
  if (r == 0 || r == 1 || r == q - 1)
    throw ConditionError("type-8 parameter s = " + std::to_string(s) +
                         " is excluded (s mod q must avoid {0, 1, -1})");
  int ri = static_cast<int>(inv_mod(r, q));
  return std::min(r, ri);
}

void validate_spec(const GroupSpec& spec, TableMode mode, bool require_canonical_s) {
  if (spec.type < 1 || spec.type > 11)
    throw ConditionError("type must be 1..11, got " + std::to_string(spec.type));
  if (!is_prime(spec.p)) throw ConditionError("p = " + std::to_string(spec.p) + " is not prime");
  if (!is_prime(spec.q)) throw ConditionError("q = " + std::to_string(spec.q) + " is not prime");
  if (spec.p == spec.q) throw ConditionError("p and q must be distinct");
  if (spec.s.has_value() != (spec.type == 8))
    throw ConditionError("parameter s is present iff type = 8");

  int p = spec.p, q = spec.q;
  switch (spec.type) {
    case 1:
    case 5:
      break;
    case 2:
      require_divides(p, q - 1, "type 2 requires p | q-1");
      break;
    case 3:
      require_divides(static_cast<long long>(p) * p, q - 1, "type 3 requires p^2 | q-1");
      break;
    case 4:
    case 6:
      require_divides(q, p - 1, "type " + std::to_string(spec.type) + " requires q | p-1");
      break;
    case 7:
      require_divides(q, p - 1, "type 7 requires q | p-1");
      if (q == 2 && mode == TableMode::kStrictPaper)
        throw ConditionError("type 7 requires 2 < q in strict-paper mode (q = 2 is the completeness extension)");
      break;
    case 8:
      require_divides(q, p - 1, "type 8 requires q | p-1");
      if (q <= 3) throw ConditionError("type 8 requires 3 < q");
      break;
    case 9:
      require_divides(q, p - 1, "type 9 requires q | p-1");
      if (q == 2) throw ConditionError("type 9 requires 2 < q");
      break;
    case 10:
      require_divides(q, p + 1, "type 10 requires q | p+1");
      if (q == 2) throw ConditionError("type 10 requires 2 < q");
      break;
    case 11:
      require_divides(p, q - 1, "type 11 requires p | q-1");
      break;
  }
  if (spec.type == 8) {
    int s = *spec.s;
    int canon = canonical_s(s, q);  // also rejects excluded residues
    if (require_canonical_s && ((s % q) + q) % q != canon)
      throw ConditionError("type-8 parameter s = " + std::to_string(s) +
                           " is not canonical (expected " + std::to_string(canon) + ")");
  }
}

CatalogBuild build_parts(const GroupSpec& spec) {
  validate_spec(spec, TableMode::kComplete);
  int p = spec.p, q = spec.q;
  switch (spec.type) {
    case 1: {
      FiniteGroup h = cyclic(p * p), k = cyclic(q);
      ActionSpec act = trivial_action(k, h);
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 2: {
      FiniteGroup h = cyclic(q), k = cyclic(p * p);
      int m = element_of_order(p, q);
      ActionSpec act = action_from_generator(k, h, 1, multiplier_map(q, m));
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 3: {
      FiniteGroup h = cyclic(q), k = cyclic(p * p);
      int m = element_of_order(p * p, q);
      ActionSpec act = action_from_generator(k, h, 1, multiplier_map(q, m));
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 4: {
      FiniteGroup h = cyclic(p * p), k = cyclic(q);
      int m = element_of_order(q, static_cast<long long>(p) * p);
      ActionSpec act = action_from_generator(k, h, 1, multiplier_map(p * p, m));
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 5: {
      FiniteGroup h = direct_product(cyclic(p), cyclic(p)), k = cyclic(q);
      ActionSpec act = trivial_action(k, h);
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 6: {
      FiniteGroup hp = cyclic(p), cq = cyclic(q);
      int zeta = element_of_order(q, p);
      ActionSpec inner_act = action_from_generator(cq, hp, 1, multiplier_map(p, zeta));
      FiniteGroup inner = semidirect(hp, cq, inner_act);  // C_p x| C_q
      FiniteGroup h = cyclic(p);
      ActionSpec act = trivial_action(inner, h);
      return {spec, semidirect(h, inner, act), h, inner, act};
    }
    case 7: {
      FiniteGroup h = direct_product(cyclic(p), cyclic(p)), k = cyclic(q);
      int zeta = element_of_order(q, p);
      ActionSpec act = action_from_generator(k, h, 1, matrix_map(gl2_scalar(p, zeta)));
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 8: {
      FiniteGroup h = direct_product(cyclic(p), cyclic(p)), k = cyclic(q);
      int zeta = element_of_order(q, p);
      int zs = static_cast<int>(pow_mod(zeta, *spec.s, p));
      ActionSpec act = action_from_generator(k, h, 1, matrix_map(gl2_diag(p, zeta, zs)));
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 9: {
      FiniteGroup h = direct_product(cyclic(p), cyclic(p)), k = cyclic(q);
      int zeta = element_of_order(q, p);
      int zi = static_cast<int>(inv_mod(zeta, p));
      ActionSpec act = action_from_generator(k, h, 1, matrix_map(gl2_diag(p, zeta, zi)));
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 10: {
      FiniteGroup h = direct_product(cyclic(p), cyclic(p)), k = cyclic(q);
      ActionSpec act = action_from_generator(k, h, 1, matrix_map(singer_element(p, q)));
      return {spec, semidirect(h, k, act), h, k, act};
    }
    case 11: {
      FiniteGroup cq = cyclic(q), cp = cyclic(p);
      int theta = element_of_order(p, q);
      ActionSpec inner_act = action_from_generator(cp, cq, 1, multiplier_map(q, theta));
      FiniteGroup inner = semidirect(cq, cp, inner_act);  // C_p |x C_q
      FiniteGroup h = cyclic(p);
      ActionSpec act = trivial_action(inner, h);
      return {spec, semidirect(h, inner, act), h, inner, act};
    }
    default:
      throw InvariantError("build_parts: unreachable");
  }
}

FiniteGroup build(const GroupSpec& spec) { return build_parts(spec).group; }

std::vector<GroupSpec> enumerate_specs(int p, int q, TableMode mode) {
  if (!is_prime(p)) throw ConditionError("p = " + std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw ConditionError("q = " + std::to_string(q) + " is not prime");
  if (p == q) throw ConditionError("p and q must be distinct");

  std::vector<GroupSpec> out;
  auto admit = [&](int type) {
    GroupSpec spec{type, p, q, std::nullopt};
    try {
      validate_spec(spec, mode);
    } catch (const ConditionError&) {
      return;
    }
    out.push_back(spec);
  };
  admit(1);
  admit(2);
  admit(3);
  admit(4);
  admit(5);
  admit(6);
  admit(7);
  if ((p - 1) % q == 0 && q > 3) {
    for (int s = 2; s <= q - 2; ++s)
      if (canonical_s(s, q) == s) out.push_back(GroupSpec{8, p, q, s});
  }
  admit(9);
  admit(10);
  admit(11);
  std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.s.value_or(0) < b.s.value_or(0);
  });
  return out;
}

namespace {

// Coordinates of every element of the elementary abelian subgroup V with
// respect to the basis (e1, e2), as exponents in 0..p-1.
std::vector<std::pair<int, int>> v_coordinates(const FiniteGroup& g,
                                               const std::vector<elem_t>& v, int p,
                                               elem_t e1, elem_t e2,
                                               std::vector<int>& coord_of) {
  coord_of.assign(g.order(), -1);
  std::vector<std::pair<int, int>> coords;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      elem_t x = g.mul(g.pow(e1, a), g.pow(e2, b));
      coord_of[x] = a * p + b;
    }
  for (elem_t x : v) {
    int c = coord_of[x];
    if (c < 0) throw InvariantError("classify: (e1, e2) is not a basis of V");
    coords.emplace_back(c / p, c % p);
  }
  return coords;
}

// Discrete log of a in the order-q subgroup generated by zeta mod p.
int dlog_mod(int a, int zeta, int q, int p) {
  long long x = 1;
  for (int e = 0; e < q; ++e) {
    if (x == a) return e;
    x = x * zeta % p;
  }
  throw InvariantError("classify: eigenvalue outside <zeta>");
}

}  // namespace

GroupSpec classify(const FiniteGroup& g) {
  auto fact = factorize(g.order());
  int p = 0, q = 0;
  if (fact.size() == 2) {
    for (auto [pr, e] : fact) {
      if (e == 2) p = static_cast<int>(pr);
      if (e == 1) q = static_cast<int>(pr);
    }
  }
  if (p == 0 || q == 0)
    throw ConditionError("classify: order " + std::to_string(g.order()) +
                         " is not of the form p^2 q");

  std::vector<elem_t> sp = sylow(g, p);
  std::vector<elem_t> sq = sylow(g, q);
  bool p_cyclic = false;
  for (elem_t x : sp)
    if (g.element_order(x) == p * p) {
      p_cyclic = true;
      break;
    }

  if (g.is_abelian()) return GroupSpec{p_cyclic ? 1 : 5, p, q, std::nullopt};

  bool q_normal = is_normal_subgroup(g, sq);
  bool p_normal = is_normal_subgroup(g, sp);
  if (q_normal && p_normal) throw InvariantError("classify: both Sylows normal in a nonabelian group");

  if (q_normal) {
    elem_t y = 0;
    for (elem_t x : sq)
      if (g.element_order(x) == q) {
        y = x;
        break;
      }
    if (p_cyclic) {
      // kernel of the P-action on Q = C_P(Q)
      int kernel = 0;
      for (elem_t x : sp)
        if (g.conj(y, x) == y) ++kernel;
      if (kernel == p) return GroupSpec{2, p, q, std::nullopt};
      if (kernel == 1) return GroupSpec{3, p, q, std::nullopt};
      throw InvariantError("classify: unexpected action kernel of order " + std::to_string(kernel));
    }
    return GroupSpec{11, p, q, std::nullopt};
  }

  if (!p_normal) throw InvariantError("classify: no normal Sylow subgroup");
  if (p_cyclic) return GroupSpec{4, p, q, std::nullopt};

  // Elementary abelian normal V acted on by an order-q element z.
  elem_t z = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(static_cast<elem_t>(x)) == q) {
      z = static_cast<elem_t>(x);
      break;
    }
  elem_t e1 = sp[0] == g.identity() ? sp[1] : sp[0];
  std::vector<elem_t> line = closure(g, {e1});
  elem_t e2 = 0;
  bool found_e2 = false;
  for (elem_t x : sp)
    if (x != g.identity() && !std::binary_search(line.begin(), line.end(), x)) {
      e2 = x;
      found_e2 = true;
      break;
    }
  if (!found_e2) throw InvariantError("classify: Sylow p-subgroup is not 2-dimensional");

  std::vector<int> coord_of;
  v_coordinates(g, sp, p, e1, e2, coord_of);
  auto row_of = [&](elem_t base) {
    int c = coord_of[g.conj(base, z)];
    if (c < 0) throw InvariantError("classify: conjugation leaves V");
    return std::pair<int, int>{c / p, c % p};
  };
  auto [m00, m01] = row_of(e1);
  auto [m10, m11] = row_of(e2);
  MatrixGL2 zmat = gl2_from_entries(p, m00, m01, m10, m11);

  if (m01 == 0 && m10 == 0 && m00 == m11) {
    if (m00 == 1) throw InvariantError("classify: trivial action on a normal Sylow in a nonabelian group");
    return GroupSpec{7, p, q, std::nullopt};  // q = 2 reports the extension row
  }
  if (!gl2_irreducible(zmat)) {
    auto [l1, l2] = eigenvalues(zmat);
    Fp2 f(p);
    if (!f.in_base(l1) || !f.in_base(l2))
      throw InvariantError("classify: reducible matrix with non-rational eigenvalues");
    int lam = l1.u, mu = l2.u;
    if (lam == 1 || mu == 1) return GroupSpec{6, p, q, std::nullopt};
    if (static_cast<long long>(lam) * mu % p == 1) return GroupSpec{9, p, q, std::nullopt};
    int zeta = element_of_order(q, p);
    int a = dlog_mod(lam, zeta, q, p);
    int b = dlog_mod(mu, zeta, q, p);
    if (a == 0 || b == 0) throw InvariantError("classify: eigenvalue 1 escaped the type-6 branch");
    int s = static_cast<int>(static_cast<long long>(b) * inv_mod(a, q) % q);
    return GroupSpec{8, p, q, canonical_s(s, q)};
  }
  return GroupSpec{10, p, q, std::nullopt};
}

std::string condition_string(int type) {
  switch (type) {
    case 1: return "";
    case 2: return "p | q-1";
    case 3: return "p^2 | q-1";
    case 4: return "q | p-1";
    case 5: return "";
    case 6: return "q | p-1";
    case 7: return "2 < q | p-1";
    case 8: return "3 < q | p-1";
    case 9: return "2 < q | p-1";
    case 10: return "2 < q | p+1";
    case 11: return "p | q-1";
    default: throw ConditionError("type must be 1..11");
  }
}

std::string group_structure_string(int type) {
  switch (type) {
    case 1: return "C_{p^2} x C_q";
    case 2: return "C_{p^2} |x_p C_q";
    case 3: return "C_{p^2} |x_1 C_q";
    case 4: return "C_{p^2} x| C_q";
    case 5: return "C_p x C_p x C_q";
    case 6: return "C_p x (C_p x| C_q)";
    case 7: return "(C_p x C_p) x|_S C_q";
    case 8: return "(C_p x C_p) x|_D0 C_q";
    case 9: return "(C_p x C_p) x|_D1 C_q";
    case 10: return "(C_p x C_p) x|_C C_q";
    case 11: return "C_p x (C_p |x C_q)";
    default: throw ConditionError("type must be 1..11");
  }
}

}  // namespace p2q
