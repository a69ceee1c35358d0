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

#include "p2q/errors.hpp"
#include "p2q/modular.hpp"

using namespace p2q;

TEST_CASE("primality and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<long long, int>{2, 3});
  CHECK(f[1] == std::pair<long long, int>{3, 2});
  CHECK(f[2] == std::pair<long long, int>{5, 1});
}

TEST_CASE("modular arithmetic") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(inv_mod(6, 9), ConditionError);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(97) == 96);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(3, 7) == 6);
}

TEST_CASE("primitive roots and canonical order-q elements") {
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(9) == 2);
  // element_of_order(q, p) has order exactly q
  for (auto [q, m] : {std::pair<int, int>{3, 7}, {5, 11}, {2, 13}, {7, 29}}) {
    int z = element_of_order(q, m);
    CHECK(mult_order(z, m) == q);
  }
  CHECK(element_of_order(2, 7) == 6);  // -1 is the only order-2 residue
  CHECK_THROWS_AS(element_of_order(5, 7), ConditionError);
}

TEST_CASE("least quadratic non-residue") {
  CHECK(least_nonresidue(3) == 2);
  CHECK(least_nonresidue(5) == 2);
  CHECK(least_nonresidue(7) == 3);
  CHECK(least_nonresidue(11) == 2);
}
