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

// Test-only oracles, independent of the catalog's own row constructions:
// exhaustive semidirect-product enumeration over *all* actions, deduplicated
// by brute-force isomorphism testing.

#pragma once

#include <utility>
#include <vector>

#include "p2q/finite_group.hpp"
#include "p2q/gl2p.hpp"
#include "p2q/modular.hpp"

namespace p2q::oracle {

inline std::vector<elem_t> multiplier_map(int n, long long m) {
  std::vector<elem_t> out(n);
  for (int y = 0; y < n; ++y) out[y] = static_cast<elem_t>(m * y % n);
  return out;
}

inline std::vector<elem_t> matrix_map(const MatrixGL2& mat) {
  int p = mat.p;
  std::vector<elem_t> out(static_cast<std::size_t>(p) * p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      auto [x, y] = gl2_apply(mat, {a, b});
      out[static_cast<std::size_t>(a) * p + b] = static_cast<elem_t>(x * p + y);
    }
  return out;
}

// Every group of order p^2 q arising as a semidirect product of a Sylow
// p-shape and C_q (in both directions), over every action homomorphism.
inline std::vector<FiniteGroup> all_semidirect_builds(int p, int q) {
  std::vector<FiniteGroup> out;

  // C_{p^2} x| C_q and (C_p x C_p) x| C_q: actions of C_q on the Sylow p.
  {
    FiniteGroup h = cyclic(p * p), k = cyclic(q);
    for (int m = 1; m < p * p; ++m) {
      if (m % p == 0) continue;
      if (pow_mod(m, q, p * p) != 1) continue;
      out.push_back(semidirect(h, k, action_from_generator(k, h, 1, multiplier_map(p * p, m))));
    }
  }
  {
    FiniteGroup h = direct_product(cyclic(p), cyclic(p)), k = cyclic(q);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c)
          for (int d = 0; d < p; ++d) {
            MatrixGL2 m{p, {a, b, c, d}};
            if (gl2_det(m) == 0) continue;
            if (!gl2_eq(gl2_pow(m, q), gl2_identity(p))) continue;
            out.push_back(semidirect(h, k, action_from_generator(k, h, 1, matrix_map(m))));
          }
  }

  // C_{p^2} |x C_q and (C_p x C_p) |x C_q: actions of the Sylow p on C_q.
  {
    FiniteGroup h = cyclic(q), k = cyclic(p * p);
    for (int m = 1; m < q; ++m) {
      if (pow_mod(m, static_cast<long long>(p) * p, q) != 1) continue;
      out.push_back(semidirect(h, k, action_from_generator(k, h, 1, multiplier_map(q, m))));
    }
  }
  {
    FiniteGroup h = cyclic(q);
    FiniteGroup k = direct_product(cyclic(p), cyclic(p));
    for (int m1 = 1; m1 < q; ++m1) {
      if (pow_mod(m1, p, q) != 1) continue;
      for (int m2 = 1; m2 < q; ++m2) {
        if (pow_mod(m2, p, q) != 1) continue;
        ActionSpec act{k, h, {}};
        act.maps.resize(static_cast<std::size_t>(p) * p);
        for (int a = 0; a < p; ++a)
          for (int b = 0; b < p; ++b)
            act.maps[static_cast<std::size_t>(a) * p + b] =
                multiplier_map(q, pow_mod(m1, a, q) * pow_mod(m2, b, q) % q);
        validate_action(act);
        out.push_back(semidirect(h, k, act));
      }
    }
  }
  return out;
}

// Isomorphism-class representatives of all_semidirect_builds.
inline std::vector<FiniteGroup> exhaustive_classes(int p, int q) {
  std::vector<FiniteGroup> reps;
  for (const FiniteGroup& g : all_semidirect_builds(p, q)) {
    bool fresh = true;
    for (const FiniteGroup& r : reps)
      if (is_isomorphic(g, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(g);
  }
  return reps;
}

}  // namespace p2q::oracle
