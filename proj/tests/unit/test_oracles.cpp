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

#include <random>

#include "divalg/brauer.hpp"
#include "divalg/verify/oracles.hpp"
#include "divalg/verify/period_fields.hpp"

using namespace divalg;

TEST_CASE("brute-force census agrees with the partition census") {
    for (int d = 1; d <= 7; ++d)
        for (auto p : {CensusPredicate::lonely, CensusPredicate::big, CensusPredicate::unique_smallest,
                       CensusPredicate::any_exclusion})
            CHECK(oracle::brute_force_census(d, p) == census(d, p).count);
}

TEST_CASE("definition flags") {
    auto f = oracle::flags_from_definitions({3, 2, 2});
    CHECK(f.lonely);
    CHECK_FALSE(f.big);
    CHECK(oracle::flags_from_definitions({4, 1}).big);
}

TEST_CASE("hilbert symbol by solvability") {
    for (long a : {-3L, -1L, 2L, 3L, 5L, 6L})
        for (long b : {-1L, 2L, 3L, 7L})
            for (long p : {2L, 3L, 5L, 7L})
                CHECK(oracle::hilbert_by_solvability(a, b, p) == hilbert_symbol(a, b, Place::prime(p)));
    CHECK(oracle::hilbert_at_infinity(-1, -1) == -1);
}

TEST_CASE("determinant oracles") {
    auto k = NumberField::quadratic(-1);
    std::mt19937_64 rng(3);
    std::vector<NFElement> e;
    for (int n = 0; n < 9; ++n) e.push_back(oracle::random_element(k, rng, 4, 2));
    MatrixNF m(k, 3, e);
    CHECK(oracle::leibniz_det(m) == determinant(m));
    auto b = oracle::random_element(k, rng, 4, 2);
    CHECK(oracle::norm_by_multiplication_matrix(b) == field_norm(b));
}

TEST_CASE("reference fields are cyclic of the requested degree") {
    for (std::size_t d = 2; d <= 9; ++d) {
        auto k = oracle::reference_field(static_cast<long>(d));
        CHECK(k->degree() == d);
        auto t = NFElement::generator(k);
        CHECK(apply_automorphism(t, static_cast<long>(d)) == t);
    }
}
