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

#include "divalg/permcycle.hpp"

using namespace divalg;

TEST_CASE("permutations compose and decompose") {
    auto p = Permutation::from_cycles(4, {{1, 2, 3, 4}});
    CHECK(p(1) == 2);
    CHECK((p * p).cycles() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK((p * p.inverse()).is_identity());
    CHECK(cycle_type_of(p * p) == CycleType({2, 2}));
    CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("cycle type classification") {
    auto f = classify_cycle_type(CycleType({3, 2, 2}));
    CHECK(f.has_lonely());
    CHECK_FALSE(f.unique_smallest);
    CHECK_FALSE(f.big_cycle);
    CHECK(classify_cycle_type(CycleType({2, 1})).unique_smallest);
    CHECK(classify_cycle_type(CycleType({3, 1})).big_cycle);
    CHECK(classify_cycle_type(CycleType({4})).is_d_cycle);
    CHECK_FALSE(classify_cycle_type(CycleType({1, 1, 1})).has_lonely());
}

TEST_CASE("class sizes") {
    CHECK(count_with_type(CycleType({3, 2, 2})) == 210);
    CHECK(count_with_type(CycleType({1, 1, 1, 1})) == 1);
    CHECK(count_with_type(CycleType({4})) == 6);
    Integer total = 0;
    for (const auto& ct : partitions(6)) total += count_with_type(ct);
    CHECK(total == 720);
    CHECK(partitions(10).size() == 42);
}

TEST_CASE("census values") {
    auto big4 = census(4, CensusPredicate::big);
    CHECK(big4.count == 8);
    CHECK(big4.fraction == Rational(1, 3));
    auto lonely7 = census(7, CensusPredicate::lonely, true);
    bool found = false;
    for (const auto& [ct, n] : lonely7.contributions)
        if (ct == CycleType({3, 2, 2})) found = (n == 210);
    CHECK(found);
    CHECK(big_cycle_fraction_exact(10) == Rational(275, 504));
    CHECK(census(10, CensusPredicate::big).fraction == Rational(275, 504));
    CHECK_THROWS(census(kCensusMaxDegree + 1, CensusPredicate::big));
}

TEST_CASE("big-cycle fraction stays below 70%") {
    for (long d : {10L, 100L, 1000L}) CHECK(big_cycle_fraction_exact(d) < Rational(7, 10));
    CHECK(big_cycle_fraction_numeric(1000000) < 0.7L);
}
