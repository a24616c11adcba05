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

#include "divalg/cyclicalg.hpp"
#include "divalg/verify/oracles.hpp"

using namespace divalg;

namespace {

AlgebraPtr hamilton() { return CyclicAlgebra::create(NumberField::quadratic(-1), -1); }

}  // namespace

TEST_CASE("defining relations") {
    auto alg = CyclicAlgebra::create(NumberField::cyclotomic_prime(5), 3);
    auto x = AlgElement::x_power(alg, 1);
    auto z = NFElement::generator(alg->field());
    CHECK(AlgElement::x_power(alg, 4) == AlgElement::from_field(alg, NFElement::from_rational(alg->field(), 3)));
    CHECK(AlgElement::from_field(alg, z) * x == x * AlgElement::from_field(alg, apply_automorphism(z, 1)));
    CHECK(x.support_size() == 1);
    CHECK_THROWS(CyclicAlgebra::create(NumberField::quadratic(2), 0));
}

TEST_CASE("quaternion arithmetic") {
    auto alg = hamilton();
    auto k = alg->field();
    auto i = AlgElement::from_field(alg, NFElement::generator(k));
    auto j = AlgElement::x_power(alg, 1);
    CHECK(i * j == -(j * i));
    CHECK(j * j == -AlgElement::one(alg));
    auto z = AlgElement::one(alg) + i + j;
    CHECK(reduced_norm(z) == 3);
    CHECK(reduced_trace(z) == 2);
    CHECK(z * z.inverse() == AlgElement::one(alg));
    CHECK(reduced_char_poly(z) == UniPoly{3, -2, 1});
}

TEST_CASE("reduced norm of x powers") {
    for (long d : {2L, 3L, 4L}) {
        FieldPtr k = d == 2 ? NumberField::quadratic(3)
                            : (d == 3 ? NumberField::custom(UniPoly{-1, -2, 1, 1}, UniPoly{-2, 0, 1})
                                      : NumberField::cyclotomic_prime(5));
        auto alg = CyclicAlgebra::create(k, Rational(5, 2));
        for (long i = 0; i < d; ++i) {
            Rational sign = (i * (d - 1)) % 2 == 0 ? 1 : -1;
            CHECK(reduced_norm(AlgElement::x_power(alg, i)) == sign * pow(Rational(5, 2), i));
        }
    }
}

TEST_CASE("regular representation is multiplicative") {
    auto alg = CyclicAlgebra::create(NumberField::custom(UniPoly{-1, -2, 1, 1}, UniPoly{-2, 0, 1}), 2);
    std::mt19937_64 rng(11);
    for (int n = 0; n < 10; ++n) {
        auto u = oracle::random_alg_element(alg, rng, 5, 3);
        auto v = oracle::random_alg_element(alg, rng, 5, 3);
        CHECK(regular_rep(u * v) == regular_rep(u) * regular_rep(v));
        CHECK(reduced_norm(u * v) == reduced_norm(u) * reduced_norm(v));
    }
}

TEST_CASE("mixing algebras is an error") {
    auto a = hamilton();
    auto b = CyclicAlgebra::create(NumberField::quadratic(-1), -3);
    CHECK_THROWS(AlgElement::one(a) + AlgElement::one(b));
}

TEST_CASE("division decisions") {
    CHECK(is_division(hamilton(), 4).decision == Decision::yes);
    auto split = is_division(CyclicAlgebra::create(NumberField::quadratic(-1), 2), 4);
    CHECK(split.decision == Decision::no);
    REQUIRE(split.witness);
    CHECK(field_norm(*split.witness) == 2);
    CHECK(is_division(CyclicAlgebra::create(NumberField::quadratic(-1), -3), 4).decision == Decision::yes);
}
