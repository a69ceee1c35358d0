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
#include <utility>
#include <vector>

namespace p2q {

bool is_prime(long long n);

// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

long long pow_mod(long long base, long long exp, long long mod);

// Inverse of a modulo mod; requires gcd(a, mod) = 1.
long long inv_mod(long long a, long long mod);

long long euler_phi(long long n);

// Multiplicative order of a modulo mod; requires gcd(a, mod) = 1.
int mult_order(long long a, long long mod);

// Least primitive root modulo mod; mod must be one of 2, 4, p^k, 2 p^k.
int primitive_root(long long mod);

// Least quadratic non-residue modulo an odd prime p.
int least_nonresidue(int p);

// Canonical element of order q in (Z/mod)^x: g^(phi(mod)/q) for the least
// primitive root g. Requires q | phi(mod).
int element_of_order(int q, long long mod);

}  // namespace p2q
