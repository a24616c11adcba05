/*
   Copyright 2026 The divalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "divalg/arith.hpp"

using namespace divalg;

TEST_CASE("primality and factorization") {
    CHECK(is_prime(std::int64_t{2}));
    CHECK(is_prime(std::int64_t{9973}));
    CHECK_FALSE(is_prime(std::int64_t{1}));
    CHECK_FALSE(is_prime(Integer(91)));
    auto f = factor(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::make_pair(Integer(2), 3));
    CHECK(f[1] == std::make_pair(Integer(3), 2));
    CHECK(f[2] == std::make_pair(Integer(5), 1));
    CHECK(prime_divisors(Integer(-84)) == std::vector<Integer>{2, 3, 7});
}

TEST_CASE("squarefree parts and valuations") {
    CHECK(is_squarefree(Integer(30)));
    CHECK_FALSE(is_squarefree(Integer(12)));
    CHECK(squarefree_part(Integer(72)) == 2);
    CHECK(squarefree_part(Integer(-75)) == -3);
    CHECK(valuation(Integer(48), Integer(2)) == 4);
    CHECK(valuation(Integer(7), Integer(3)) == 0);
}

TEST_CASE("totient, sieve, primitive roots") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(24) == 8);
    CHECK(primes_below(20) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(11) == 2);
    CHECK(powmod(3, 6, 7) == 1);
    CHECK(powmod(2, 10, 1000) == 24);
}
