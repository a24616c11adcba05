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

#include "divalg/brauer.hpp"
#include "divalg/cyclicalg.hpp"

using namespace divalg;

TEST_CASE("hilbert symbols") {
    CHECK(hilbert_symbol(2, 3, Place::prime(3)) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::prime(2)) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::infinity()) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::prime(3)) == 1);
    CHECK(hilbert_symbol(2, 3, Place::prime(2)) == -1);
    CHECK(hilbert_symbol(Rational(1, 4), 7, Place::prime(7)) == 1);
}

TEST_CASE("places") {
    CHECK(Place::parse("inf") == Place::infinity());
    CHECK(Place::parse("5").to_string() == "5");
    CHECK(Place::prime(7) < Place::infinity());
    CHECK_THROWS(Place::prime(6));
}

TEST_CASE("quaternion invariants") {
    auto ham = CyclicAlgebra::create(NumberField::quadratic(-1), -1);
    auto inv = quaternion_invariants(*ham);
    CHECK(inv.to_string() == "{2: 1/2, inf: 1/2}");
    auto checks = invariant_checks(inv);
    CHECK(checks.sum_zero);
    CHECK(checks.index == 2);

    auto alg = CyclicAlgebra::create(NumberField::quadratic(3), 2);
    CHECK(quaternion_invariants(*alg).to_string() == "{2: 1/2, 3: 1/2}");

    auto split = CyclicAlgebra::create(NumberField::quadratic(-1), 2);
    auto s = quaternion_invariants(*split);
    CHECK(invariant_checks(s).index == 1);
}

TEST_CASE("multiplicative orders") {
    CHECK(multiplicative_order(3, 8) == 2);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(2, 7) == 3);
}

TEST_CASE("root of unity obstruction") {
    auto r3 = root_of_unity_report(3, 1000);
    CHECK(r3.excluded);
    CHECK(r3.branch == RootBranch::degree);
    CHECK(r3.r == 3);
    auto r4 = root_of_unity_report(4, 1000);
    CHECK(r4.excluded);
    CHECK(r4.branch == RootBranch::local_degree);
    CHECK(r4.r == 8);
    CHECK(r4.group_exponent == 2);
    CHECK_FALSE(r4.counterexample);
    auto r8 = root_of_unity_report(8, 1000);
    CHECK(r8.max_order_seen == 4);
    for (long d = 3; d <= 12; ++d) CHECK(root_of_unity_report(d, 500).excluded);
}
