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

#include <array>
#include <utility>
#include <vector>

#include "p2q/errors.hpp"

namespace p2q {

// Invertible 2x2 matrix over F_p, row-major [m00 m01; m10 m11]. Vectors are
// rows acting on the right (v -> v*M), so matrix powers compose the same way
// as exponent notation.
struct MatrixGL2 {
  int p = 0;
  std::array<int, 4> m{};
};

MatrixGL2 gl2_from_entries(int p, int m00, int m01, int m10, int m11);
MatrixGL2 gl2_identity(int p);
MatrixGL2 gl2_scalar(int p, int lambda);
MatrixGL2 gl2_diag(int p, int lambda, int mu);
bool gl2_eq(const MatrixGL2& a, const MatrixGL2& b);
int gl2_det(const MatrixGL2& a);
int gl2_trace(const MatrixGL2& a);
MatrixGL2 gl2_mul(const MatrixGL2& a, const MatrixGL2& b);
MatrixGL2 gl2_inv(const MatrixGL2& a);
MatrixGL2 gl2_pow(const MatrixGL2& a, long long e);
std::pair<int, int> gl2_apply(const MatrixGL2& a, std::pair<int, int> v);

// Least k >= 1 with a^k = I.
int mat_order(const MatrixGL2& a);

// True iff the characteristic polynomial has no root in F_p.
bool gl2_irreducible(const MatrixGL2& a);

// An element u + v*w of F_{p^2} where w^2 = alpha*w + beta per the owning Fp2.
struct Fp2Element {
  int p = 0;
  int u = 0;
  int v = 0;
};

// F_{p^2} as F_p[w]/(w^2 - r) with r the least quadratic non-residue mod p;
// for p = 2 that recipe fails (every element is a square), so F_4 is
// hardcoded as F_2[w]/(w^2 + w + 1).
class Fp2 {
 public:
  explicit Fp2(int p);

  int p() const { return p_; }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }

  Fp2Element make(int u, int v) const;
  Fp2Element from_base(int u) const { return make(u, 0); }
  Fp2Element zero() const { return make(0, 0); }
  Fp2Element one() const { return make(1, 0); }
  bool is_zero(const Fp2Element& x) const { return x.u == 0 && x.v == 0; }
  bool in_base(const Fp2Element& x) const { return x.v == 0; }
  bool eq(const Fp2Element& x, const Fp2Element& y) const;
  Fp2Element add(const Fp2Element& x, const Fp2Element& y) const;
  Fp2Element sub(const Fp2Element& x, const Fp2Element& y) const;
  Fp2Element mul(const Fp2Element& x, const Fp2Element& y) const;
  Fp2Element inv(const Fp2Element& x) const;
  Fp2Element pow(const Fp2Element& x, long long e) const;
  Fp2Element frobenius(const Fp2Element& x) const { return pow(x, p_); }
  // Multiplicative order; x must be nonzero.
  int mult_order(const Fp2Element& x) const;

 private:
  int p_, alpha_, beta_;
};

// Roots of the characteristic polynomial of a in F_{p^2}, with multiplicity,
// ordered lexicographically by (u, v).
std::pair<Fp2Element, Fp2Element> eigenvalues(const MatrixGL2& a);

// The companion matrix [[0,1],[-1,t]] of order q with t = lambda + lambda^p
// for the canonical lambda of order q in F_{p^2}^x (the lex-least one).
// Requires 2 < q | p+1.
MatrixGL2 singer_element(int p, int q);

// All invertible u*I + v*Z, in (u, v) lex order; requires Z irreducible.
std::vector<MatrixGL2> centralizer_in_gl2(const MatrixGL2& z);

// True iff s^{-1} g s = g^p for every g in centralizer_in_gl2(z).
bool frobenius_conjugation_check(const MatrixGL2& z, const MatrixGL2& s);

}  // namespace p2q
