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

#include "divalg/numberfield.hpp"

using namespace divalg;

namespace {

FieldPtr cubic7() { return NumberField::custom(UniPoly{-1, -2, 1, 1}, UniPoly{-2, 0, 1}); }

}  // namespace

TEST_CASE("cyclotomic field structure") {
    auto k = NumberField::cyclotomic_prime(5);
    CHECK(k->degree() == 4);
    CHECK(k->sigma_image() == UniPoly{0, 0, 1});
    auto z = NFElement::generator(k);
    CHECK(z * z * z * z * z == NFElement::one(k));
    CHECK(field_norm(z) == 1);
    CHECK(field_trace(z) == -1);
}

TEST_CASE("cubic field norm and trace of the generator") {
    auto k = cubic7();
    auto t = NFElement::generator(k);
    CHECK(field_norm(t) == 1);
    CHECK(field_trace(t) == -1);
    // sigma has order 3
    CHECK(apply_automorphism(t, 3) == t);
    CHECK_FALSE(apply_automorphism(t, 1) == t);
}

TEST_CASE("quadratic inverse") {
    auto k = NumberField::quadratic(2);
    NFElement u(k, {1, 1});
    CHECK(u.inverse() == NFElement(k, {-1, 1}));
    CHECK(field_norm(u) == -1);
    CHECK_THROWS(NFElement::zero(k).inverse());
}

TEST_CASE("invalid fields are rejected") {
    CHECK_THROWS(NumberField::quadratic(4));
    CHECK_THROWS(NumberField::quadratic(1));
    CHECK_THROWS(NumberField::cyclotomic_prime(9));
    // t^2 - 1 is reducible
    CHECK_THROWS(NumberField::custom(UniPoly{-1, 0, 1}, UniPoly{0, -1}));
}

TEST_CASE("norm equations") {
    auto gauss = NumberField::quadratic(-1);
    auto two = is_galois_norm(gauss, 2, 4);
    CHECK(two.decision == Decision::yes);
    REQUIRE(two.witness);
    CHECK(field_norm(*two.witness) == 2);
    CHECK(is_galois_norm(gauss, 3, 4).decision == Decision::no);
    CHECK(is_galois_norm(gauss, -1, 4).decision == Decision::no);

    auto k = cubic7();
    auto r = is_galois_norm(k, 7, 2);
    CHECK(r.decision == Decision::yes);
    REQUIRE(r.witness);
    CHECK(field_norm(*r.witness) == 7);
    CHECK(is_galois_norm(k, 2, 1).decision == Decision::unknown);
}

TEST_CASE("norm agrees with resultant on sampled elements") {
    auto k = NumberField::cyclotomic_prime(7);
    int seen = 0;
    for_each_element_by_height(k, 1, [&](const NFElement& b) {
        CHECK(field_norm(b) == norm_by_resultant(b));
        return ++seen < 200;
    });
    CHECK(seen == 200);
}
