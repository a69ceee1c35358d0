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

#include "p2q/modular.hpp"

#include "p2q/errors.hpp"

namespace p2q {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long pow_mod(long long base, long long exp, long long mod) {
  if (mod <= 0) throw ConditionError("pow_mod: modulus must be positive");
  long long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

long long inv_mod(long long a, long long mod) {
  long long r0 = mod, r1 = a % mod;
  if (r1 < 0) r1 += mod;
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw ConditionError("inv_mod: arguments are not coprime");
  return t0 < 0 ? t0 + mod : t0;
}

long long euler_phi(long long n) {
  long long phi = 1;
  for (auto [p, e] : factorize(n)) {
    long long pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

int mult_order(long long a, long long mod) {
  long long phi = euler_phi(mod);
  long long ord = phi;
  for (auto [p, e] : factorize(phi)) {
    (void)e;
    while (ord % p == 0 && pow_mod(a, ord / p, mod) == 1) ord /= p;
  }
  return static_cast<int>(ord);
}

int primitive_root(long long mod) {
  long long phi = euler_phi(mod);
  auto fact = factorize(phi);
  for (long long g = 2; g < mod; ++g) {
    if (pow_mod(g, phi, mod) != 1) continue;  // skips g not coprime to mod
    bool primitive = true;
    for (auto [p, e] : fact) {
      (void)e;
      if (pow_mod(g, phi / p, mod) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return static_cast<int>(g);
  }
  throw ConditionError("primitive_root: modulus has no primitive root");
}

int least_nonresidue(int p) {
  if (p == 2) throw ConditionError("least_nonresidue: p must be odd");
  for (int r = 2; r < p; ++r) {
    if (pow_mod(r, (p - 1) / 2, p) == p - 1) return r;
  }
  throw ConditionError("least_nonresidue: none found (p not prime?)");
}

int element_of_order(int q, long long mod) {
  long long phi = euler_phi(mod);
  if (phi % q != 0) throw ConditionError("element_of_order: q does not divide phi(mod)");
  long long g = primitive_root(mod);
  return static_cast<int>(pow_mod(g, phi / q, mod));
}

}  // namespace p2q
