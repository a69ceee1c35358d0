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

#include "p2q/gl2p.hpp"

#include <string>

#include "p2q/modular.hpp"

namespace p2q {

namespace {

int norm_mod(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

MatrixGL2 gl2_from_entries(int p, int m00, int m01, int m10, int m11) {
  if (!is_prime(p)) throw ConditionError("gl2: p must be prime");
  MatrixGL2 a{p, {norm_mod(m00, p), norm_mod(m01, p), norm_mod(m10, p), norm_mod(m11, p)}};
  if (gl2_det(a) == 0) throw ConditionError("gl2: matrix is singular mod " + std::to_string(p));
  return a;
}

MatrixGL2 gl2_identity(int p) { return gl2_from_entries(p, 1, 0, 0, 1); }

MatrixGL2 gl2_scalar(int p, int lambda) { return gl2_from_entries(p, lambda, 0, 0, lambda); }

MatrixGL2 gl2_diag(int p, int lambda, int mu) { return gl2_from_entries(p, lambda, 0, 0, mu); }

bool gl2_eq(const MatrixGL2& a, const MatrixGL2& b) { return a.p == b.p && a.m == b.m; }

int gl2_det(const MatrixGL2& a) {
  return norm_mod(static_cast<long long>(a.m[0]) * a.m[3] -
                      static_cast<long long>(a.m[1]) * a.m[2],
                  a.p);
}

int gl2_trace(const MatrixGL2& a) { return norm_mod(a.m[0] + a.m[3], a.p); }

MatrixGL2 gl2_mul(const MatrixGL2& a, const MatrixGL2& b) {
  if (a.p != b.p) throw ConditionError("gl2: mixed characteristics");
  MatrixGL2 c{a.p, {}};
  c.m[0] = norm_mod(static_cast<long long>(a.m[0]) * b.m[0] + static_cast<long long>(a.m[1]) * b.m[2], a.p);
  c.m[1] = norm_mod(static_cast<long long>(a.m[0]) * b.m[1] + static_cast<long long>(a.m[1]) * b.m[3], a.p);
  c.m[2] = norm_mod(static_cast<long long>(a.m[2]) * b.m[0] + static_cast<long long>(a.m[3]) * b.m[2], a.p);
  c.m[3] = norm_mod(static_cast<long long>(a.m[2]) * b.m[1] + static_cast<long long>(a.m[3]) * b.m[3], a.p);
  return c;
}

MatrixGL2 gl2_inv(const MatrixGL2& a) {
  long long di = inv_mod(gl2_det(a), a.p);
  MatrixGL2 c{a.p, {}};
  c.m[0] = norm_mod(di * a.m[3], a.p);
  c.m[1] = norm_mod(-di * a.m[1], a.p);
  c.m[2] = norm_mod(-di * a.m[2], a.p);
  c.m[3] = norm_mod(di * a.m[0], a.p);
  return c;
}

MatrixGL2 gl2_pow(const MatrixGL2& a, long long e) {
  MatrixGL2 base = a;
  if (e < 0) {
    base = gl2_inv(a);
    e = -e;
  }
  MatrixGL2 acc = gl2_identity(a.p);
  while (e > 0) {
    if (e & 1) acc = gl2_mul(acc, base);
    base = gl2_mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::pair<int, int> gl2_apply(const MatrixGL2& a, std::pair<int, int> v) {
  return {norm_mod(static_cast<long long>(v.first) * a.m[0] + static_cast<long long>(v.second) * a.m[2], a.p),
          norm_mod(static_cast<long long>(v.first) * a.m[1] + static_cast<long long>(v.second) * a.m[3], a.p)};
}

int mat_order(const MatrixGL2& a) {
  MatrixGL2 id = gl2_identity(a.p);
  MatrixGL2 x = a;
  long long cap = static_cast<long long>(a.p) * a.p * a.p * a.p;
  for (int k = 1; k <= cap; ++k) {
    if (gl2_eq(x, id)) return k;
    x = gl2_mul(x, a);
  }
  throw InvariantError("mat_order: no finite order found");
}

bool gl2_irreducible(const MatrixGL2& a) {
  int t = gl2_trace(a), d = gl2_det(a);
  for (int x = 0; x < a.p; ++x)
    if (norm_mod(static_cast<long long>(x) * x - static_cast<long long>(t) * x + d, a.p) == 0)
      return false;
  return true;
}

// --- F_{p^2} ----------------------------------------------------------------

Fp2::Fp2(int p) : p_(p) {
  if (!is_prime(p)) throw ConditionError("Fp2: p must be prime");
  if (p == 2) {
    alpha_ = 1;
    beta_ = 1;  // w^2 = w + 1
  } else {
    alpha_ = 0;
    beta_ = least_nonresidue(p);  // w^2 = r
  }
}

Fp2Element Fp2::make(int u, int v) const { return Fp2Element{p_, norm_mod(u, p_), norm_mod(v, p_)}; }

bool Fp2::eq(const Fp2Element& x, const Fp2Element& y) const { return x.u == y.u && x.v == y.v; }

Fp2Element Fp2::add(const Fp2Element& x, const Fp2Element& y) const {
  return make(x.u + y.u, x.v + y.v);
}

Fp2Element Fp2::sub(const Fp2Element& x, const Fp2Element& y) const {
  return make(x.u - y.u, x.v - y.v);
}

Fp2Element Fp2::mul(const Fp2Element& x, const Fp2Element& y) const {
  // (u1 + v1 w)(u2 + v2 w) with w^2 = alpha w + beta
  long long vv = static_cast<long long>(x.v) * y.v;
  long long u = static_cast<long long>(x.u) * y.u + beta_ * vv;
  long long v = static_cast<long long>(x.u) * y.v + static_cast<long long>(x.v) * y.u + alpha_ * vv;
  return make(static_cast<int>(u % p_), static_cast<int>(v % p_));
}

Fp2Element Fp2::pow(const Fp2Element& x, long long e) const {
  Fp2Element base = x;
  if (e < 0) {
    base = inv(x);
    e = -e;
  }
  Fp2Element acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Fp2Element Fp2::inv(const Fp2Element& x) const {
  if (is_zero(x)) throw ConditionError("Fp2: division by zero");
  // x^{-1} = x^p / N(x) with N(x) = x * x^p in the base field
  Fp2Element conj = frobenius(x);
  Fp2Element n = mul(x, conj);
  if (!in_base(n)) throw InvariantError("Fp2: norm not in base field");
  long long ni = inv_mod(n.u, p_);
  return make(static_cast<int>(conj.u * ni % p_), static_cast<int>(conj.v * ni % p_));
}

int Fp2::mult_order(const Fp2Element& x) const {
  if (is_zero(x)) throw ConditionError("Fp2: zero has no multiplicative order");
  Fp2Element y = x;
  int cap = p_ * p_ - 1;
  for (int k = 1; k <= cap; ++k) {
    if (eq(y, one())) return k;
    y = mul(y, x);
  }
  throw InvariantError("Fp2: order search exceeded p^2 - 1");
}

std::pair<Fp2Element, Fp2Element> eigenvalues(const MatrixGL2& a) {
  Fp2 f(a.p);
  int t = gl2_trace(a), d = gl2_det(a);
  std::vector<Fp2Element> roots;
  for (int u = 0; u < a.p && roots.size() < 2; ++u)
    for (int v = 0; v < a.p && roots.size() < 2; ++v) {
      Fp2Element x = f.make(u, v);
      Fp2Element val = f.add(f.sub(f.mul(x, x), f.mul(f.from_base(t), x)), f.from_base(d));
      if (f.is_zero(val)) roots.push_back(x);
    }
  if (roots.empty()) throw InvariantError("eigenvalues: quadratic with no root in its splitting field");
  if (roots.size() == 1) return {roots[0], roots[0]};  // double root
  return {roots[0], roots[1]};
}

MatrixGL2 singer_element(int p, int q) {
  if (!is_prime(p) || !is_prime(q)) throw ConditionError("singer_element: p, q must be prime");
  if (q <= 2)
    throw ConditionError("singer_element: q = " + std::to_string(q) +
                         " rejected; the q = 2 row is the scalar completeness extension");
  if ((p + 1) % q != 0)
    throw ConditionError("singer_element: q must divide p+1 (" + std::to_string(q) +
                         " does not divide " + std::to_string(p + 1) + ")");
  Fp2 f(p);
  // Canonical lambda: lex-least element of multiplicative order q. All such
  // elements are powers of g^((p^2-1)/q) for any generator g, so this choice
  // is independent of the generator.
  Fp2Element lambda = f.zero();
  bool found = false;
  for (int u = 0; u < p && !found; ++u)
    for (int v = 0; v < p && !found; ++v) {
      Fp2Element x = f.make(u, v);
      if (f.is_zero(x)) continue;
      if (f.eq(f.pow(x, q), f.one()) && !f.eq(x, f.one())) {
        lambda = x;
        found = true;
      }
    }
  if (!found) throw InvariantError("singer_element: no element of order q found");
  Fp2Element t2 = f.add(lambda, f.frobenius(lambda));
  if (!f.in_base(t2)) throw InvariantError("singer_element: trace not in F_p");
  MatrixGL2 z = gl2_from_entries(p, 0, 1, -1, t2.u);
  if (gl2_det(z) != 1) throw InvariantError("singer_element: determinant is not 1");
  if (mat_order(z) != q) throw InvariantError("singer_element: order is not q");
  if (!gl2_irreducible(z)) throw InvariantError("singer_element: reducible characteristic polynomial");
  return z;
}

std::vector<MatrixGL2> centralizer_in_gl2(const MatrixGL2& z) {
  if (!gl2_irreducible(z))
    throw ConditionError("centralizer_in_gl2: stated for irreducible (Singer-type) matrices only");
  std::vector<MatrixGL2> out;
  int p = z.p;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v) {
      if (u == 0 && v == 0) continue;
      MatrixGL2 m{p,
                  {norm_mod(u + static_cast<long long>(v) * z.m[0], p), norm_mod(static_cast<long long>(v) * z.m[1], p),
                   norm_mod(static_cast<long long>(v) * z.m[2], p), norm_mod(u + static_cast<long long>(v) * z.m[3], p)}};
      if (gl2_det(m) == 0)
        throw InvariantError("centralizer_in_gl2: singular element in F_p[Z]");
      out.push_back(m);
    }
  return out;
}

bool frobenius_conjugation_check(const MatrixGL2& z, const MatrixGL2& s) {
  MatrixGL2 si = gl2_inv(s);
  for (const MatrixGL2& g : centralizer_in_gl2(z)) {
    MatrixGL2 lhs = gl2_mul(gl2_mul(si, g), s);
    MatrixGL2 rhs = gl2_pow(g, z.p);
    if (!gl2_eq(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace p2q
